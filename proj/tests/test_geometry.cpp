#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supergeom/distribution.hpp"
#include "supergeom/models.hpp"
#include "supergeom/parser.hpp"
#include "supergeom/vectorfield.hpp"
#include "test_util.hpp"

using namespace sg;

TEST_CASE("bracket of the vertical with the total derivative on the SHC chart") {
    Model m = models::shc_model();
    // [d_uxx, D_x] = d_ux + u_xx d_z
    SuperVectorField b = lie_bracket(m.generators[1], m.generators[0]);
    auto t = m.chart;
    CHECK(b.coeff(t->require("u_x")) == parse_expression(t, "1"));
    CHECK(b.coeff(t->require("z")) == parse_expression(t, "u_xx"));
    CHECK(b.coeff(t->require("u")).is_zero());
    CHECK(b.coeff(t->require("u_nu")).is_zero());
}

TEST_CASE("odd-odd self bracket [D_nu, D_nu] vanishes for SHC") {
    Model m = models::shc_model();
    CHECK(lie_bracket(m.generators[2], m.generators[2]).is_zero());
    // even self bracket is identically zero
    CHECK(lie_bracket(m.generators[0], m.generators[0]).is_zero());
}

TEST_CASE("bracket is a derivation pairing") {
    Model m = models::shc_model();
    auto t = m.chart;
    sgt::Rng rng(11);
    for (int k = 0; k < 12; ++k) {
        const auto& X = m.generators[rng.range(0, 5)];
        const auto& Y = m.generators[rng.range(0, 5)];
        Parity pf = (rng.next() & 1) ? Parity::Odd : Parity::Even;
        auto f = sgt::random_poly(t, rng, 3, 2, pf);
        // [X, fY] = X(f) Y + (-1)^{|X||f|} f [X,Y]
        SuperVectorField lhs = lie_bracket(X, Y.lmul(f));
        SuperVectorField rhs = Y.lmul(X.apply(f));
        SuperVectorField t2 = lie_bracket(X, Y).lmul(f);
        int sgn = (pint(X.parity()) & pint(pf)) ? -1 : 1;
        for (int c = 0; c < t->size(); ++c) {
            SuperPolynomial want = rhs.coeff(c);
            want += sgn < 0 ? -t2.coeff(c) : t2.coeff(c);
            CHECK(lhs.coeff(c) == want);
        }
    }
}

TEST_CASE("super-Jacobi for vector fields on model generators") {
    Model m = models::shc_model();
    auto t = m.chart;
    sgt::Rng rng(12);
    for (int trial = 0; trial < 8; ++trial) {
        const auto& X = m.generators[rng.range(0, 5)];
        const auto& Y = m.generators[rng.range(0, 5)];
        const auto& Z = m.generators[rng.range(0, 5)];
        int px = pint(X.parity()), py = pint(Y.parity()), pz = pint(Z.parity());
        SuperVectorField t1 = lie_bracket(lie_bracket(X, Y), Z);
        SuperVectorField t2 = lie_bracket(lie_bracket(Y, Z), X);
        SuperVectorField t3 = lie_bracket(lie_bracket(Z, X), Y);
        for (int c = 0; c < t->size(); ++c) {
            SuperPolynomial s(t);
            s += (px & pz) ? -t1.coeff(c) : t1.coeff(c);
            s += (py & px) ? -t2.coeff(c) : t2.coeff(c);
            s += (pz & py) ? -t3.coeff(c) : t3.coeff(c);
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("insertion conventions on the flat contact form") {
    Model m = models::flat_contact22_model();
    auto t = m.chart;
    const SuperOneForm& sigma = m.annihilator[0];
    SuperVectorField du(t, Parity::Even);
    du.set_coeff("u", SuperPolynomial::constant(t, Rational(1)));
    CHECK(insert(du, sigma) == parse_expression(t, "1"));
    for (const auto& g : m.generators) CHECK(insert(g, sigma).is_zero());
}

TEST_CASE("annihilator symmetry check on SHC examples") {
    Model m = models::shc_model();
    auto t = m.chart;
    SuperVectorField dz(t, Parity::Even);
    dz.set_coeff("z", SuperPolynomial::constant(t, Rational(1)));
    CHECK(annihilator_symmetry_check(dz, m));

    SuperVectorField dux(t, Parity::Even);
    dux.set_coeff("u_x", SuperPolynomial::constant(t, Rational(1)));
    std::string w;
    CHECK_FALSE(annihilator_symmetry_check(dux, m, &w));
    CHECK(!w.empty());
}

TEST_CASE("all 31 SHC symmetry generators pass the annihilator check") {
    Model m = models::shc_model();
    auto fields = models::shc_symmetries();
    REQUIRE(fields.size() == 31);
    int even = 0, odd = 0;
    for (size_t i = 0; i < fields.size(); ++i) {
        CAPTURE(i);
        std::string w;
        bool ok = annihilator_symmetry_check(fields[i], m, &w);
        CAPTURE(w);
        CHECK(ok);
        (fields[i].parity() == Parity::Even ? even : odd)++;
    }
    CHECK(even == 17);
    CHECK(odd == 14);
}

TEST_CASE("symmetry property is closed under brackets (SHC samples)") {
    Model m = models::shc_model();
    auto fields = models::shc_symmetries();
    sgt::Rng rng(13);
    for (int k = 0; k < 10; ++k) {
        const auto& X = fields[rng.range(0, 30)];
        const auto& Y = fields[rng.range(0, 30)];
        SuperVectorField b = lie_bracket(X, Y);
        if (b.is_zero()) continue;
        CHECK(annihilator_symmetry_check(b, m));
    }
}

TEST_CASE("Cartan route and Leibniz route agree up to the global sign") {
    Model m = models::shc_model();
    auto fields = models::shc_symmetries();
    sgt::Rng rng(14);
    for (int k = 0; k < 8; ++k) {
        const auto& X = fields[rng.range(0, 30)];
        const auto& V = m.generators[rng.range(0, 5)];
        for (const auto& s : m.annihilator) {
            auto a = lie_derivative_eval(X, s, V);
            auto b = lie_derivative_eval_cartan(X, s, V);
            int sgn = (pint(X.parity()) & pint(s.parity())) ? -1 : 1;
            CHECK(a == (sgn < 0 ? -b : b));
            // symmetry iff the Lie derivative annihilates the distribution
            CHECK(a.is_zero());
        }
    }
}

TEST_CASE("derived flag of SHC has growth (2|4,1|2,2|0)") {
    Model m = models::shc_model();
    auto rep = derived_flag(m, m.points.at("origin"));
    std::vector<std::pair<int, int>> want = {{2, 4}, {1, 2}, {2, 0}};
    CHECK(rep.growth == want);
    CHECK(rep.bracket_generating);
    auto rep2 = derived_flag(m, m.points.at("base"));
    CHECK(rep2.growth == want);
}

TEST_CASE("derived flag of the flat contact (4|4) distribution") {
    Model m = models::flat_contact22_model();
    auto rep = derived_flag(m, {});
    std::vector<std::pair<int, int>> want = {{4, 4}, {1, 0}};
    CHECK(rep.growth == want);
    CHECK(rep.bracket_generating);
}

TEST_CASE("derived flag of the (6|6) system distribution") {
    Model sys = models::g3system_model();
    auto rep = derived_flag(sys, {});
    // H has rank (3|4); its own weak derived flag fills the chart in two steps
    std::vector<std::pair<int, int>> want = {{3, 4}, {1, 2}, {2, 0}};
    CHECK(rep.growth == want);

    Model d22 = models::g3system_rank22_model();
    auto rep2 = derived_flag(d22, {});
    std::vector<std::pair<int, int>> want2 = {{2, 2}, {1, 2}, {1, 2}, {1, 0}, {1, 0}};
    CHECK(rep2.growth == want2);
}

TEST_CASE("Cauchy characteristics of the system distribution") {
    Model sys = models::g3system_model();
    auto sols = cauchy_characteristics(sys, 1);
    REQUIRE(sols.size() == 1);
    // C = D_x - lambda D_y - theta D_nu - phi D_tau, up to scale
    auto t = sys.chart;
    const auto& C = sols[0];
    SuperPolynomial cx = C.coeff(t->require("x"));
    REQUIRE(!cx.is_zero());
    // normalize on the d_x coefficient
    Rational scale = cx.terms().begin()->second;
    auto D = models::g3system_model().generators;
    SuperVectorField want = D[0] + (-D[1].lmul(SuperPolynomial::variable(t, "lambda"))) +
                            (-D[3].lmul(SuperPolynomial::variable(t, "theta"))) +
                            (-D[4].lmul(SuperPolynomial::variable(t, "phi")));
    for (int c = 0; c < t->size(); ++c)
        CHECK(C.coeff(c) == want.coeff(c) * scale);
}

TEST_CASE("SHC distribution has no Cauchy characteristics") {
    Model m = models::shc_model();
    auto sols = cauchy_characteristics(m, 2);
    CHECK(sols.empty());
}

TEST_CASE("symbol extraction for SHC gives the M1 pattern") {
    Model m = models::shc_model();
    auto rep = symbol_components(m, m.points.at("base"));
    CHECK(rep.jacobi_ok);
    CHECK(rep.f1);
    CHECK(rep.f2);
    CHECK(rep.f3);
    CHECK(rep.n1);
    CHECK(rep.n2);
    CHECK(dense_rank(rep.q) == 4);
    CHECK(dense_rank(rep.beta) == 2);
    CHECK(!rep.omega[0][1].is_zero());
    CHECK(rep.classification == "M1");
}

TEST_CASE("m=1 lift data has symbol M2") {
    Model m = models::submax_model(1);
    auto rep = symbol_components(m, m.points.at("origin"));
    CHECK(rep.jacobi_ok);
    CHECK(rep.classification == "M2");
}

TEST_CASE("structure constancy witness at sampled points") {
    Model m = models::shc_model();
    auto rep = derived_flag(m, m.points.at("base"), 4, true);
    CHECK(rep.structure_constant);
}

TEST_CASE("bracket-generating growth sums to the chart dimension") {
    for (const char* name : {"shc", "flat-contact-22", "g3contact-system", "g3system-rank22"}) {
        CAPTURE(name);
        Model m = models::model_by_name(name);
        auto rep = derived_flag(m, m.points.at(m.default_point));
        CHECK(rep.bracket_generating);
        int e = 0, o = 0;
        for (auto [a, b] : rep.growth) {
            e += a;
            o += b;
        }
        CHECK(e == m.chart->even_count());
        CHECK(o == m.chart->odd_count());
    }
}
