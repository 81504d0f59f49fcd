#ifndef SUPERGEOM_CONTACT_HPP
#define SUPERGEOM_CONTACT_HPP

#include "supergeom/vectorfield.hpp"

namespace sg {

// Contact calculus on a first jet-superspace with Darboux coordinates
// (x^i, u, u_i) and its second-jet extension with coordinates u_{ij},
// u_{ij} = (-1)^{|i||j|} u_{ji}, canonicalized to representatives i <= j
// (odd diagonal entries vanish structurally).
class JetCalculus {
public:
    JetCalculus(TablePtr j1, std::vector<std::string> xs, std::vector<std::string> us);

    const TablePtr& j1() const { return j1_; }
    const TablePtr& j2() const { return j2_; }
    int n() const { return static_cast<int>(xs_.size()); }
    Parity index_parity(int i) const;
    const std::string& x_name(int i) const { return xs_[i]; }
    const std::string& u_name(int i) const { return us_[i]; }
    // name of the representative second-jet coordinate ("" for odd diagonal)
    std::string jet2_name(int i, int j) const;
    // u_{ij} as a polynomial on J2 (signed representative; 0 on odd diagonal)
    SuperPolynomial u2(int i, int j) const;

    // D_{x^i} = d_i + u_i d_u on J1
    SuperVectorField D(int i) const;
    // truncated total derivative on J2
    SuperVectorField Dtilde(int i) const;

    SuperOneForm sigma() const;        // du - sum (dx^i) u_i on J1
    SuperOneForm sigma_j2() const;     // the same form on the J2 chart
    SuperOneForm sigma_k(int k) const; // du_k - sum (dx^i) u_{ik} on J2

    // contact vector field of a parity-homogeneous generating superfunction
    SuperVectorField contact_field(const SuperPolynomial& f) const;
    SuperPolynomial lagrange_bracket(const SuperPolynomial& f,
                                     const SuperPolynomial& g) const;
    // canonical prolongation to J2
    SuperVectorField prolong(const SuperPolynomial& f) const;

    // substitute: does the prolonged field of f preserve the equation cut out
    // by the given J2 relations? `solved` maps solved J2 coordinates to their
    // right-hand sides; every relation and every S~_f(relation) must vanish
    // after substitution.
    bool tangency_check(const SuperPolynomial& f,
                        const std::vector<SuperPolynomial>& relations,
                        const std::map<int, SuperPolynomial>& solved,
                        std::string* witness = nullptr) const;

private:
    TablePtr j1_, j2_;
    std::vector<std::string> xs_, us_;
    std::vector<int> xi_, ui_;                       // J1 indices
    std::vector<int> xi2_, ui2_;                     // J2 indices of x^i, u_i
    int u_j1_ = -1, u_j2_ = -1;
    std::map<std::pair<int, int>, int> jet2_;        // (i<=j) -> J2 index
};

}  // namespace sg

#endif
