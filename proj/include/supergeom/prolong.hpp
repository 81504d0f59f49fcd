#ifndef SUPERGEOM_PROLONG_HPP
#define SUPERGEOM_PROLONG_HPP

#include "supergeom/lsa.hpp"

namespace sg {

struct ProlongationResult {
    std::pair<int, int> dim0;                 // degree-zero part
    std::vector<std::pair<int, int>> dims;    // degrees 1..max_degree
    bool terminated = false;                  // top computed degree vanished
    std::vector<std::pair<int, int>> negative;  // dims of m by depth (1,2,...)
    std::pair<int, int> total() const;
};

// Degree-by-degree transitive prolongation of the negatively graded m with a
// prescribed degree-zero part (or der_gr(m) when g0 == nullptr). The spaces
// g_k for k > 0 are computed as degree-k maps m -> (prolongation so far)
// compatible with all brackets.
ProlongationResult tanaka_prolongation(const GradedLSA& m, const std::vector<Derivation>* g0,
                                       int max_degree);

}  // namespace sg

#endif
