#ifndef SUPERGEOM_ROOTS_HPP
#define SUPERGEOM_ROOTS_HPP

#include <array>
#include <string>
#include <vector>

#include "supergeom/rational.hpp"
#include "supergeom/superpoly.hpp"

namespace sg {

// A weight a*delta + c1*eps1 + c2*eps2 (eps3 = -eps1 - eps2 eliminated),
// with the invariant pairing <eps_i,eps_j> = 1 - 3 delta_ij, <delta,delta> = 2,
// <eps_i,delta> = 0.
struct Root {
    int a = 0, c1 = 0, c2 = 0;
    bool operator==(const Root& o) const { return a == o.a && c1 == o.c1 && c2 == o.c2; }
    bool operator<(const Root& o) const {
        return std::tie(a, c1, c2) < std::tie(o.a, o.c1, o.c2);
    }
    Root operator+(const Root& o) const { return {a + o.a, c1 + o.c1, c2 + o.c2}; }
    Root operator-() const { return {-a, -c1, -c2}; }
};

int pairing(const Root& x, const Root& y);

struct SimpleSystem {
    std::string name;            // "I".."IV"
    std::array<Root, 3> alpha;
    std::array<Parity, 3> parity;
};

// Root data of the exceptional Lie superalgebra of dimension (17|14).
class RootDatumG3 {
public:
    RootDatumG3();

    const std::vector<Root>& even_roots() const { return even_; }
    const std::vector<Root>& odd_roots() const { return odd_; }
    const SimpleSystem& system(const std::string& name) const;
    static const std::vector<std::string>& system_names();

    bool is_root(const Root& r, Parity* parity = nullptr) const;

    // coefficients of r in the given simple basis (exact)
    std::array<Rational, 3> coefficients(const SimpleSystem& s, const Root& r) const;

    // positive roots of a simple system (nonnegative integer coefficients)
    std::vector<Root> positive_roots(const SimpleSystem& s, Parity p) const;

    // even reflection at a non-isotropic root
    Root even_reflect(const Root& alpha, const Root& beta) const;
    // odd reflection of a simple system at its i-th root (must be odd isotropic);
    // returns the transformed system together with the matched standard name
    SimpleSystem odd_reflect(const SimpleSystem& s, int i, std::string* matched = nullptr) const;
    // name of the standard system equal to s up to reordering ("" if none)
    std::string match_system(const std::array<Root, 3>& alpha) const;

    // parity-split dims of g_{-1}, g_{-2}, ... for the parabolic given by the
    // marked subset A of {1,2,3} (1-based)
    std::vector<std::pair<int, int>> parabolic_growth(const SimpleSystem& s,
                                                      const std::vector<int>& A) const;
    // degree-zero dims including the Cartan subalgebra
    std::pair<int, int> parabolic_dim0(const SimpleSystem& s, const std::vector<int>& A) const;

private:
    std::vector<Root> even_, odd_;
    std::vector<SimpleSystem> systems_;
};

// One row of the supergeometry atlas.
struct FlagRow {
    std::string system;
    std::vector<int> marked;
    std::string label;
    std::vector<std::pair<int, int>> growth;
};
// All 19 flag supergeometries with their expected growth vectors.
const std::vector<FlagRow>& flag_atlas();

}  // namespace sg

#endif
