#ifndef SUPERGEOM_SPENCER_HPP
#define SUPERGEOM_SPENCER_HPP

#include "supergeom/lsa.hpp"

namespace sg {

// Chevalley-Eilenberg (Spencer) complex of the negatively graded part m of a
// graded LSA g, with coefficients in the adjoint g-module, split into blocks
// by internal degree d and parity. Cochain slots are super-alternating: even
// slots strictly increase, odd slots may repeat (symmetric directions).
class SpencerComplex {
public:
    explicit SpencerComplex(const GradedLSA& g);

    // canonical basis of the n-cochains of internal degree d and parity p;
    // restricted = the subcomplex of cochains vanishing on all-even slots
    struct Basis {
        std::vector<std::pair<std::vector<int>, int>> elems;  // (m-tuple, target g index)
    };
    Basis block(int n, int d, Parity p, bool restricted) const;

    // differential on the block, as columns over (target tuple, g index) rows
    struct Matrix {
        int rows = 0;
        std::vector<SVec> cols;
    };
    Matrix differential(int n, int d, Parity p, bool restricted) const;

    // parity-split cohomology dimension H^{d,n}
    std::pair<int, int> H(int d, int n, bool restricted = false) const;

    bool d_squared_zero(int d, Parity p, bool restricted = false) const;

    // equivariance spot check: the action of an even degree-0 basis element of
    // g commutes with the differential on the (n, d, p) block
    bool equivariance_check(int n, int d, Parity p) const;

    const GradedLSA& algebra() const { return g_; }
    const std::vector<int>& m_indices() const { return m_; }

    // Gauge-normalized kernel representatives of the even (d=2, n=2) block and
    // the cocycle-condition check used by the curvature normal form: after
    // normalization every representative satisfies
    //   phi(eps, [e,h]) + [phi(e,eps), h] = 0
    // for h the (g_-2)-even generator, e in (g_-1)-even, eps in (g_-1)-odd.
    bool curvature_normal_form_check(std::string* witness = nullptr) const;

private:
    const GradedLSA& g_;
    std::vector<int> m_;  // indices of negative-degree basis elements

    // enumerate canonical n-tuples of m indices
    std::vector<std::vector<int>> tuples(int n) const;
    bool all_even(const std::vector<int>& t) const;
    int tuple_degree(const std::vector<int>& t) const;
    Parity tuple_parity(const std::vector<int>& t) const;
    // canonicalize a tuple in place, returning the super sign (0 if it dies)
    int canonicalize(std::vector<int>& t) const;
    // evaluate the differential of the basis cochain (T, k) on tuple S
    GradedLSA::Vec apply_d(int n, const std::vector<int>& T, int k,
                           const std::vector<int>& S) const;
    // evaluate the basis cochain on an arbitrary tuple: coefficient of e_k
    int eval_sign(const std::vector<int>& T, const std::vector<int>& S) const;
};

}  // namespace sg

#endif
