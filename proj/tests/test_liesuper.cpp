#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supergeom/distribution.hpp"
#include "supergeom/lsa.hpp"
#include "supergeom/models.hpp"
#include "test_util.hpp"

using namespace sg;

TEST_CASE("abelian pair builds a 2-dimensional abelian algebra") {
    auto t = models::shc_chart();
    SuperVectorField du(t, Parity::Even);
    du.set_coeff("u", SuperPolynomial::constant(t, Rational(1)));
    SuperVectorField dz(t, Parity::Even);
    dz.set_coeff("z", SuperPolynomial::constant(t, Rational(1)));
    auto res = lsa_from_vector_fields({du, dz});
    REQUIRE(res.closed);
    CHECK(res.algebra.dim() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(res.algebra.bracket(i, j).empty());
}

static const GradedLSA& g3_shc() {
    static GradedLSA L = [] {
        auto res = lsa_from_vector_fields(models::shc_symmetries());
        if (!res.closed) throw std::logic_error(res.failure);
        return res.algebra;
    }();
    return L;
}

TEST_CASE("G(3) from the 31 SHC symmetries: closure, Jacobi, graded dims") {
    const GradedLSA& L = g3_shc();
    REQUIRE(L.dim() == 31);
    std::string w;
    CHECK(L.degrees_additive(&w));
    CHECK(L.parity_additive(&w));
    bool jac = L.check_jacobi(&w);
    CAPTURE(w);
    CHECK(jac);
    auto dims = L.graded_dims();
    std::map<int, std::pair<int, int>> want = {
        {-3, {2, 0}}, {-2, {1, 2}}, {-1, {2, 4}}, {0, {7, 2}},
        {1, {2, 4}},  {2, {1, 2}},  {3, {2, 0}}};
    CHECK(dims == want);
    CHECK(L.killing_rank() == 31);
}

TEST_CASE("submaximal generator list closes to a (10|8) algebra") {
    auto fields = models::submax_symmetries(3);
    REQUIRE(fields.size() == 18);
    auto res = lsa_from_vector_fields(fields);
    REQUIRE(res.closed);
    std::string w;
    bool jac = res.algebra.check_jacobi(&w);
    CAPTURE(w);
    CHECK(jac);
    int even = 0, odd = 0;
    for (int i = 0; i < res.algebra.dim(); ++i)
        (res.algebra.element(i).parity == Parity::Even ? even : odd)++;
    CHECK(even == 10);
    CHECK(odd == 8);
}

TEST_CASE("permuting the input fields yields the same invariants") {
    auto fields = models::shc_symmetries();
    std::vector<SuperVectorField> shuffled;
    // fixed deterministic permutation
    std::vector<int> perm;
    for (int i = 0; i < 31; ++i) perm.push_back((7 * i + 3) % 31);
    for (int i : perm) shuffled.push_back(fields[i]);
    auto a = lsa_from_vector_fields(fields);
    auto b = lsa_from_vector_fields(shuffled);
    REQUIRE(a.closed);
    REQUIRE(b.closed);
    CHECK(a.algebra.graded_dims() == b.algebra.graded_dims());
    std::string w;
    CHECK(b.algebra.check_jacobi(&w));
    CHECK(a.algebra.bracket_fingerprint() == b.algebra.bracket_fingerprint());
}

TEST_CASE("centralizers in G(3) with the SHC grading") {
    const GradedLSA& L = g3_shc();
    // centralizer of all of m = centre of m = g_{-3}, dimension (2|0)
    std::vector<GradedLSA::Vec> mspan;
    for (int i = 0; i < L.dim(); ++i)
        if (L.element(i).degree < 0) mspan.push_back(L.basis_vec(i));
    auto c = L.centralizer(mspan);
    auto [ce, co] = GradedLSA::parity_split(L, c);
    CHECK(ce == 2);
    CHECK(co == 0);
    for (const auto& v : c) {
        for (int i = 0; i < L.dim(); ++i)
            if (!v[i].is_zero()) CHECK(L.element(i).degree == -3);
    }

    // centralizer of the even part of m: sp(2) + (g_{-2})_odd + g_{-3} = (5|2)
    std::vector<GradedLSA::Vec> m0span;
    for (int i = 0; i < L.dim(); ++i)
        if (L.element(i).degree < 0 && L.element(i).parity == Parity::Even)
            m0span.push_back(L.basis_vec(i));
    auto c0 = L.centralizer(m0span);
    auto [c0e, c0o] = GradedLSA::parity_split(L, c0);
    CHECK(c0e == 5);
    CHECK(c0o == 2);

    // centralizer of (g_-2)_0 + (g_-3)_0: sp(2) + (g_-1)_1 + g_-2 + g_-3 = (6|6)
    std::vector<GradedLSA::Vec> dspan;
    for (int i : L.indices_of_degree_parity(-2, Parity::Even)) dspan.push_back(L.basis_vec(i));
    for (int i : L.indices_of_degree_parity(-3, Parity::Even)) dspan.push_back(L.basis_vec(i));
    auto cd = L.centralizer(dspan);
    auto [cde, cdo] = GradedLSA::parity_split(L, cd);
    CHECK(cde == 6);
    CHECK(cdo == 6);

    // centralizer of 0 is everything
    auto call = L.centralizer({});
    CHECK(static_cast<int>(call.size()) == L.dim());
}

TEST_CASE("derivations of the SHC symbol have dimension (7|2)") {
    GradedLSA m = models::symbol_model("M1");
    auto der = derivations_gr(m);
    int even = 0, odd = 0;
    for (const auto& d : der) (d.parity == Parity::Even ? even : odd)++;
    CHECK(even == 7);
    CHECK(odd == 2);
    std::string w;
    CHECK(derivations_closed(m, der, &w));
}

TEST_CASE("derivations of the contact Heisenberg superalgebra: cspo(4|4) = (17|16)") {
    GradedLSA m = models::contact_symbol();
    auto der = derivations_gr(m);
    int even = 0, odd = 0;
    for (const auto& d : der) (d.parity == Parity::Even ? even : odd)++;
    CHECK(even == 17);
    CHECK(odd == 16);
}

TEST_CASE("derivations of the abelian (1|0) line form gl(1)") {
    GradedLSA m(std::vector<GradedLSA::BasisElement>{{"e", Parity::Even, -1}});
    auto der = derivations_gr(m);
    int even = 0, odd = 0;
    for (const auto& d : der) (d.parity == Parity::Even ? even : odd)++;
    CHECK(even == 1);
    CHECK(odd == 0);
}

TEST_CASE("symbol models M1-M4 are graded LSAs and classify correctly") {
    for (std::string which : {"M1", "M2", "M3", "M4"}) {
        GradedLSA m = models::symbol_model(which);
        std::string w;
        CHECK(m.check_jacobi(&w));
        CHECK(m.degrees_additive(&w));
        CHECK(classify_symbol_lsa(m) == which);
    }
}

TEST_CASE("negative part of G(3) is isomorphic in dims to the SHC symbol") {
    const GradedLSA& L = g3_shc();
    GradedLSA m = L.negative_part();
    auto dims = m.graded_dims();
    std::map<int, std::pair<int, int>> want = {{-3, {2, 0}}, {-2, {1, 2}}, {-1, {2, 4}}};
    CHECK(dims == want);
    CHECK(classify_symbol_lsa(m) == "M1");
}

#include "supergeom/prolong.hpp"

TEST_CASE("prolongation of the SHC symbol recovers the full (17|14) algebra") {
    GradedLSA m = models::symbol_model("M1");
    auto res = tanaka_prolongation(m, nullptr, 4);
    CHECK(res.dim0 == std::pair<int, int>{7, 2});
    REQUIRE(res.dims.size() == 4);
    CHECK(res.dims[0] == std::pair<int, int>{2, 4});
    CHECK(res.dims[1] == std::pair<int, int>{1, 2});
    CHECK(res.dims[2] == std::pair<int, int>{2, 0});
    CHECK(res.dims[3] == std::pair<int, int>{0, 0});
    CHECK(res.terminated);
    CHECK(res.total() == std::pair<int, int>{17, 14});
}

TEST_CASE("prescribing g0 = der_gr(m) agrees with the default") {
    GradedLSA m = models::symbol_model("M1");
    auto der = derivations_gr(m);
    auto a = tanaka_prolongation(m, &der, 3);
    auto b = tanaka_prolongation(m, nullptr, 3);
    CHECK(a.dim0 == b.dim0);
    CHECK(a.dims == b.dims);
}

TEST_CASE("transitivity kills the prolongation of the abelian line with g0 = 0") {
    GradedLSA m(std::vector<GradedLSA::BasisElement>{{"e", Parity::Even, -1}});
    std::vector<Derivation> zero;
    auto res = tanaka_prolongation(m, &zero, 3);
    CHECK(res.dim0 == std::pair<int, int>{0, 0});
    for (auto d : res.dims) CHECK(d == std::pair<int, int>{0, 0});
    CHECK(res.terminated);
}

TEST_CASE("non-closing field families are reported") {
    auto t = models::shc_chart();
    // x d_u and d_x do not close: their bracket is d_u, outside the span
    SuperVectorField a(t, Parity::Even);
    a.set_coeff("u", SuperPolynomial::variable(t, "x"));
    SuperVectorField b(t, Parity::Even);
    b.set_coeff("x", SuperPolynomial::constant(t, Rational(1)));
    auto res = lsa_from_vector_fields({a, b});
    CHECK_FALSE(res.closed);
    CHECK(!res.failure.empty());
}
