#ifndef SUPERGEOM_DISTRIBUTION_HPP
#define SUPERGEOM_DISTRIBUTION_HPP

#include <optional>
#include <string>

#include "supergeom/lsa.hpp"
#include "supergeom/models.hpp"

namespace sg {

// Growth and symbol data of a superdistribution at a designated classical point.
struct SymbolReport {
    std::vector<std::pair<int, int>> growth;  // parity-split ranks per depth
    bool bracket_generating = false;
    bool rank_drop = false;        // some expected rank was not attained
    std::string note;

    // depth-3 component maps in an adapted basis (all over Scalar):
    // omega: 2x2 skew on (g_-1)_0; q: 4x4 symmetric on (g_-1)_1;
    // Xi[e][theta] in (g_-2)_1 coords; Theta[theta][rho] in (g_-3)_0 coords;
    // beta[e] in (g_-3)_0 coords (bracket with the g_-2 generator h).
    std::vector<std::vector<Rational>> omega, q;
    std::vector<std::vector<std::vector<Rational>>> Xi, Theta;
    std::vector<std::vector<Rational>> beta;
    bool jacobi_ok = false;
    bool f1 = false, f2 = false, f3 = false, n1 = false, n2 = false;
    std::string classification;  // M1..M4 / other / not computed
    bool structure_constant = true;  // symbol constant across sampled points
};

// Evaluate the generators of the weak derived flag at a classical point and
// report parity-split ranks per depth; also witnesses constancy of the
// adapted structure functions by re-sampling at random classical points.
SymbolReport derived_flag(const Model& model, const std::map<int, Rational>& point,
                          int max_depth = 8, bool constancy_check = false);

// sigma([X,V]) = 0 for every generator V and annihilator form sigma.
// Throws if the annihilator does not annihilate the generators.
bool annihilator_symmetry_check(const SuperVectorField& X, const Model& model,
                                std::string* witness = nullptr);

// Basis of Cauchy characteristics found with polynomial coefficients of
// weighted degree <= bound: fields sum_i a_i * generator_i whose brackets
// with all generators stay inside the distribution.
std::vector<SuperVectorField> cauchy_characteristics(const Model& model, int bound);

// Extract the depth-3 symbol components (growth must be (2|4,1|2,2|0)).
SymbolReport symbol_components(const Model& model, const std::map<int, Rational>& point);

// Classify a symbol report by the rank/degeneracy invariants.
std::string classify_symbol(const SymbolReport& r);

// Classification of a symbol presented abstractly as a graded LSA with
// growth (2|4,1|2,2|0).
std::string classify_symbol_lsa(const GradedLSA& m);

}  // namespace sg

#endif
