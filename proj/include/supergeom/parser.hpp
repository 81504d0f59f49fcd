#ifndef SUPERGEOM_PARSER_HPP
#define SUPERGEOM_PARSER_HPP

#include <stdexcept>
#include <string>

#include "supergeom/superpoly.hpp"

namespace sg {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: rational literals (`p/q`), identifiers, + - * ^ with nonnegative
// integer exponents (rejected on odd variables for exponent > 1), parentheses.
SuperPolynomial parse_expression(const TablePtr& table, const std::string& text);

}  // namespace sg

#endif
