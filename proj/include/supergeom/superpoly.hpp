#ifndef SUPERGEOM_SUPERPOLY_HPP
#define SUPERGEOM_SUPERPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergeom/rational.hpp"

namespace sg {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline int pint(Parity p) { return static_cast<int>(p); }

// Ordered table of named variables with parity and integer weight. The order
// is fixed for the lifetime of the table and defines the canonical odd
// monomial order. Tables are shared immutably.
class VariableTable {
public:
    struct Var {
        std::string name;
        Parity parity;
        int weight;
        int slot;  // even: exponent index; odd: bit position
    };

    static std::shared_ptr<const VariableTable> make(
        std::vector<std::tuple<std::string, Parity, int>> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    int even_count() const { return even_count_; }
    int odd_count() const { return odd_count_; }
    const Var& var(int i) const { return vars_[i]; }
    int index_of(const std::string& name) const;  // -1 if absent
    int require(const std::string& name) const;
    // global index of the odd variable occupying bit `b`
    int odd_bit_to_index(int b) const { return odd_index_[b]; }
    int even_slot_to_index(int s) const { return even_index_[s]; }

private:
    std::vector<Var> vars_;
    std::map<std::string, int> by_name_;
    std::vector<int> odd_index_, even_index_;
    int even_count_ = 0, odd_count_ = 0;
};

using TablePtr = std::shared_ptr<const VariableTable>;

// Monomial: dense exponent vector over the even variables plus a bitmask of
// odd variables (theta^2 = 0 is structural).
struct Monomial {
    std::vector<uint16_t> even;
    uint64_t odd = 0;

    bool operator<(const Monomial& o) const {
        if (odd != o.odd) return odd < o.odd;
        return even < o.even;
    }
    bool operator==(const Monomial& o) const { return odd == o.odd && even == o.even; }
};

// Exact supercommutative polynomial: rational coefficients, even polynomial
// variables, anticommuting odd variables.
class SuperPolynomial {
public:
    SuperPolynomial() = default;
    explicit SuperPolynomial(TablePtr table) : table_(std::move(table)) {}

    static SuperPolynomial constant(TablePtr table, const Rational& c);
    static SuperPolynomial variable(TablePtr table, const std::string& name);
    static SuperPolynomial variable(TablePtr table, int index);

    const TablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    SuperPolynomial operator-() const;
    SuperPolynomial operator+(const SuperPolynomial& o) const;
    SuperPolynomial operator-(const SuperPolynomial& o) const;
    SuperPolynomial operator*(const SuperPolynomial& o) const;
    SuperPolynomial operator*(const Rational& c) const;
    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    bool operator==(const SuperPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SuperPolynomial& o) const { return !(*this == o); }

    SuperPolynomial pow(int n) const;

    // Left partial derivative by the named/indexed variable.
    SuperPolynomial partial_left(const std::string& name) const;
    SuperPolynomial partial_left(int index) const;

    // Ring-homomorphic substitution; bindings must parity-match.
    SuperPolynomial substitute(const std::map<int, SuperPolynomial>& bindings) const;

    // Rebuild this polynomial over another table, matching variables by name.
    SuperPolynomial transport(const TablePtr& to) const;

    // Evaluate at a classical point (odd coordinates zero).
    Rational eval_classical(const std::map<int, Rational>& point) const;

    // Parity of a parity-homogeneous polynomial; nullopt for 0 or mixed.
    std::optional<Parity> parity() const;
    bool parity_homogeneous(Parity p) const;

    int weighted_degree_of(const Monomial& m) const;
    // Split into weighted-homogeneous parts, ascending weight.
    std::vector<std::pair<int, SuperPolynomial>> weighted_split() const;
    bool weighted_homogeneous(int w) const;
    // max total degree over terms (number of variable letters)
    int total_degree() const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TablePtr table_;
    std::map<Monomial, Rational> terms_;

    void check_same_table(const SuperPolynomial& o) const;
};

// Sign of the supercommutative product of two odd masks; 0 if they intersect.
int odd_mul_sign(uint64_t a, uint64_t b);

}  // namespace sg

#endif
