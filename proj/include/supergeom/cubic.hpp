#ifndef SUPERGEOM_CUBIC_HPP
#define SUPERGEOM_CUBIC_HPP

#include <array>

#include "supergeom/contact.hpp"
#include "supergeom/lsa.hpp"

namespace sg {

// A point T = lam w_1 + th w_2 + ph w_3 of the 3-dimensional (1|2) module W,
// with coefficients in an arbitrary supercommutative coefficient algebra.
struct CubicPoint {
    SuperPolynomial lam, th, ph;
};
// A dual point T* = mu w^1 + dl w^2 + ep w^3.
struct DualPoint {
    SuperPolynomial mu, dl, ep;
};

// The supersymmetric cubic/quadratic forms attached to the (1|2)-twisted
// cubic, with index parities |1| even, |2| = |3| odd. All products are taken
// in the written order of the defining formulas.
namespace cubic {

int index_parity(int a);  // 0-based: 0 even, 1,2 odd

SuperPolynomial C3(const CubicPoint& T);   // lam^3/3 + 2 lam th ph
SuperPolynomial G2(const CubicPoint& T);   // lam^2 + 4 th ph
std::array<SuperPolynomial, 3> Cc(const CubicPoint& T);
std::array<std::array<SuperPolynomial, 3>, 3> Cbc(const CubicPoint& T);
Rational Cabc(int a, int b, int c);

SuperPolynomial Cst3(const DualPoint& T);  // 4/9 mu^3 + 2/3 mu dl ep
SuperPolynomial Gst2(const DualPoint& T);  // mu^2 + dl ep
std::array<SuperPolynomial, 3> Cstc(const DualPoint& T);
std::array<std::array<SuperPolynomial, 3>, 3> Cstbc(const DualPoint& T);
Rational Cstabc(int a, int b, int c);

}  // namespace cubic

struct IdentityReport {
    bool id1 = false, id2 = false, id3 = false;
    bool restricted_id1 = false;  // classical restriction check 4 lam^4 mu / 81
    std::string witness;
    bool all() const { return id1 && id2 && id3 && restricted_id1; }
};
IdentityReport verify_key_identities();

struct SpoMatrix {
    std::string name;
    Parity parity;
    std::vector<std::vector<Rational>> m;  // 8x8, acts on column vectors
};
// The 12 matrices spanning the semisimple part of the contact structure
// algebra in the standard 8-dimensional basis.
const std::vector<SpoMatrix>& spo_matrices();
// The symplectic-orthogonal form with V1-block scale c2 (invariant at -216).
std::vector<std::vector<Rational>> eta_matrix(const Rational& c2);

struct Osp32Report {
    bool invariance_ok = false;
    bool wrong_scale_fails = false;
    std::string wrong_scale_witness;
    bool closes = false;
    std::pair<int, int> span_dim{0, 0};
    bool kaplansky_ok = false;
    std::string note;
    bool all() const {
        return invariance_ok && wrong_scale_fails && closes && span_dim.first == 6 &&
               span_dim.second == 6 && kaplansky_ok;
    }
};
Osp32Report osp32_checks();

// span{B_0..B_3} of the tangent family is eta-isotropic for all parameters
bool lagrangian_family_isotropic(std::string* witness = nullptr);
// the closed-form column vector of the parametrized curve agrees with the
// cubic-form expression of it
bool twisted_cubic_parametrization_ok(std::string* witness = nullptr);

struct G3Equation {
    JetCalculus jets;
    std::vector<SuperPolynomial> relations;  // five solved relations on J2
    std::map<int, SuperPolynomial> solved;   // solved coordinate -> rhs
    TablePtr goursat_chart;                  // J2 chart with (lambda,theta,phi)
    std::vector<SuperPolynomial> goursat;    // the (2|2) parametric relations
};
G3Equation build_g3_equation();

// the jet chart used by the contact picture
JetCalculus g3_jets();

// generating functions of the symmetry table rebuilt from the cubic form
// machinery (33 = 1 + 8 + 2 + 3 + 9 + 3 + 8 + 1 entries; the 9 middle entries
// span the 5-dimensional reductive block together with relations)
std::vector<SuperPolynomial> allsyms_specialized();

// cosp(3|2) acting as derivations of the contact symbol: the 12 matrices in
// the CSpO basis extended by zero on the centre, plus the grading element
std::vector<Derivation> cosp32_derivations();

// Lie superalgebra generated by generating functions under the Lagrange
// bracket, with degrees shifted so that a function of weighted degree w sits
// in degree w - 2.
FieldAlgebraResult lagrange_algebra(const JetCalculus& jets,
                                    const std::vector<SuperPolynomial>& funcs);

}  // namespace sg

#endif
