#ifndef SUPERGEOM_LSA_HPP
#define SUPERGEOM_LSA_HPP

#include <map>
#include <string>
#include <vector>

#include "supergeom/linalg.hpp"
#include "supergeom/vectorfield.hpp"

namespace sg {

// Finite-dimensional graded Lie superalgebra over the rationals, presented by
// a homogeneous basis and sparse structure constants. Brackets are stored for
// index pairs i <= j; the other order follows from super-antisymmetry
//   [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j].
class GradedLSA {
public:
    struct BasisElement {
        std::string label;
        Parity parity;
        int degree;
    };

    using Vec = std::vector<Rational>;  // dense coordinate vector over the basis

    GradedLSA() = default;
    explicit GradedLSA(std::vector<BasisElement> basis) : basis_(std::move(basis)) {}

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& element(int i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }

    void set_bracket(int i, int j, std::vector<std::pair<int, Rational>> value);
    // bracket of two basis elements, any index order
    std::vector<std::pair<int, Rational>> bracket(int i, int j) const;
    Vec bracket_vec(const Vec& x, const Vec& y) const;

    Vec zero_vec() const { return Vec(dim(), Rational(0)); }
    Vec basis_vec(int i) const;

    // invariant checks
    bool degrees_additive(std::string* witness = nullptr) const;
    bool parity_additive(std::string* witness = nullptr) const;
    bool check_jacobi(std::string* witness = nullptr) const;

    // degree -> (even dim, odd dim)
    std::map<int, std::pair<int, int>> graded_dims() const;

    // indices of basis elements with given degree (and optionally parity)
    std::vector<int> indices_of_degree(int d) const;
    std::vector<int> indices_of_degree_parity(int d, Parity p) const;

    // centralizer of the span of the given vectors: basis + parity-split dim
    std::vector<Vec> centralizer(const std::vector<Vec>& span) const;
    static std::pair<int, int> parity_split(const GradedLSA& L, const std::vector<Vec>& vecs);

    // rank of the Killing form K(x,y) = str(ad_x ad_y)
    int killing_rank() const;

    // negative part as a standalone graded LSA (basis order preserved)
    GradedLSA negative_part() const;

    // permutation-invariant fingerprint: for each (deg_i, deg_j) pair the rank
    // of the component bracket map, plus graded dims
    std::string bracket_fingerprint() const;

private:
    std::vector<BasisElement> basis_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> br_;
};

// Result of expressing pairwise brackets of polynomial vector fields in their
// own span.
struct FieldAlgebraResult {
    GradedLSA algebra;
    bool closed = true;
    std::string failure;  // witness when not closed
};

// Build a GradedLSA from supervector fields: all pairwise brackets are
// computed and expressed in the span by exact linear solve. Degrees are the
// weighted degrees of the (weighted-homogeneous) input fields.
FieldAlgebraResult lsa_from_vector_fields(const std::vector<SuperVectorField>& fields,
                                          bool closure_check = true);

// A graded derivation of degree zero, as a dense matrix on the basis of m
// (column j = image of basis element j).
struct Derivation {
    Parity parity;
    std::vector<GradedLSA::Vec> matrix;
};

// Degree-0 (super)derivations of a negatively graded LSA; returns a basis.
std::vector<Derivation> derivations_gr(const GradedLSA& m);

// Verify that the given maps are derivations and closed under commutator
// (used when a structure reduction g0 is supplied by hand).
bool derivations_closed(const GradedLSA& m, const std::vector<Derivation>& g0,
                        std::string* witness = nullptr);

}  // namespace sg

#endif
