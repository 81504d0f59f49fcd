#ifndef SUPERGEOM_SOLVER_HPP
#define SUPERGEOM_SOLVER_HPP

#include "supergeom/distribution.hpp"
#include "supergeom/models.hpp"

namespace sg {

// Per-weighted-degree symmetry solver: for each degree k the linear system
// sigma([X,V]) = 0 is solved over all polynomial ansatz fields of weighted
// degree k (coefficients clipped at the stated total degree).
struct DegreeBlock {
    int degree = 0;
    int even = 0, odd = 0;
    std::vector<SuperVectorField> basis;
};

struct SolveResult {
    std::vector<DegreeBlock> blocks;
    std::pair<int, int> total{0, 0};
    bool truncated = false;  // ansatz pools were clipped by the total-degree cap
    bool closed = false;     // brackets of the basis stay inside the span
    std::string note;
};

SolveResult solve_symmetries(const Model& model, int bound, int lo, int hi);

// membership of a field in the solved span
bool solution_contains(const SolveResult& r, const SuperVectorField& X);

// constraint system for a super-Monge datum to be of SHC type
struct FGHKReport {
    bool eq_first = false, eq_second = false, eq_third = false, eq_fourth = false;
    bool invertible = false;
    std::string witness;
    bool shc_type() const {
        return eq_first && eq_second && eq_third && eq_fourth && invertible;
    }
};
FGHKReport fghk_shc_constraints(const FGHKData& d, const std::map<int, Rational>& point);

// builds the lifted rank (2|2) distribution, rejecting non-SHC data
Model lift_to_m12(const FGHKData& d);

// the 18 shipped generators of the submaximal model: symmetry check, closure,
// dimension (10|8) and the sp(2) direct-summand split
struct SubmaxReport {
    bool symmetries_ok = false;
    bool closed = false;
    bool jacobi = false;
    std::pair<int, int> dims{0, 0};
    bool sp2_split = false;
    std::string witness;
    bool all() const { return symmetries_ok && closed && jacobi && sp2_split; }
};
SubmaxReport verify_submaximal_generators(int m);

// the 5-parameter solution family of the flat super-Monge system and the
// degree-3 ansatz converse
struct SolutionsReport {
    bool family_satisfies = false;
    int free_parameters = 0;
    bool residuals_vanish = false;
    std::string witness;
    bool all() const { return family_satisfies && residuals_vanish && free_parameters == 5; }
};
SolutionsReport verify_solutions();

}  // namespace sg

#endif
