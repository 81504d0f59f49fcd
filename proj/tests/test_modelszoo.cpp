#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "supergeom/solver.hpp"
#include "test_util.hpp"

using namespace sg;

TEST_CASE("FGHK constraints: flat data passes, linear data fails invertibility") {
    auto shc = models::shc_fghk();
    std::map<int, Rational> base = {{shc.F.table()->require("u_xx"), Rational(1)}};
    auto rep = fghk_shc_constraints(shc, base);
    CAPTURE(rep.witness);
    CHECK(rep.eq_first);
    CHECK(rep.eq_second);
    CHECK(rep.eq_third);
    CHECK(rep.eq_fourth);
    CHECK(rep.invertible);
    // ddF = 1 for the flat datum
    CHECK(shc.F.partial_left("u_xx").partial_left("u_xx") ==
          SuperPolynomial::constant(shc.F.table(), Rational(1)));

    auto cubicdata = models::monge_fghk(3);
    std::map<int, Rational> base3 = {{cubicdata.F.table()->require("u_xx"), Rational(1)}};
    auto rep3 = fghk_shc_constraints(cubicdata, base3);
    CAPTURE(rep3.witness);
    CHECK(rep3.shc_type());

    auto lin = models::monge_fghk(1);
    std::map<int, Rational> base1 = {{lin.F.table()->require("u_xx"), Rational(1)}};
    auto rep1 = fghk_shc_constraints(lin, base1);
    CHECK(rep1.eq_first);
    CHECK(rep1.eq_second);
    CHECK(rep1.eq_third);
    CHECK(rep1.eq_fourth);
    CHECK_FALSE(rep1.invertible);
}

TEST_CASE("zero data gives a degenerate growth vector") {
    Model m = models::fghk_model(models::zero_fghk(), "zero");
    auto rep = derived_flag(m, {});
    CHECK(rep.growth != std::vector<std::pair<int, int>>{{2, 4}, {1, 2}, {2, 0}});
}

TEST_CASE("the lifted rank (2|2) distribution has the five-step growth") {
    Model lift = lift_to_m12(models::shc_fghk());
    auto rep = derived_flag(lift, lift.points.at("base"));
    std::vector<std::pair<int, int>> want = {{2, 2}, {1, 2}, {1, 2}, {1, 0}, {1, 0}};
    CHECK(rep.growth == want);

    Model lift3 = lift_to_m12(models::monge_fghk(3));
    auto rep3 = derived_flag(lift3, lift3.points.at("base"));
    CHECK(rep3.growth == want);

    CHECK_THROWS(lift_to_m12(models::monge_fghk(1)));
}

TEST_CASE("submaximal generator suites verify for m = 3, 5 and the flat m = 2") {
    for (int m : {3, 5, 2}) {
        CAPTURE(m);
        auto rep = verify_submaximal_generators(m);
        CAPTURE(rep.witness);
        CHECK(rep.symmetries_ok);
        CHECK(rep.closed);
        CHECK(rep.jacobi);
        CHECK(rep.dims == std::pair<int, int>{10, 8});
        CHECK(rep.sp2_split);
    }
    CHECK_THROWS(verify_submaximal_generators(1));
    CHECK_THROWS(verify_submaximal_generators(0));
}

TEST_CASE("solution family and the degree-3 ansatz converse") {
    auto rep = verify_solutions();
    CAPTURE(rep.witness);
    CHECK(rep.family_satisfies);
    CHECK(rep.residuals_vanish);
    CHECK(rep.free_parameters == 5);
}

TEST_CASE("classification is invariant under re-basing the generators") {
    Model m = models::shc_model();
    // parity-preserving constant change of generators
    sgt::Rng rng(31);
    std::vector<SuperVectorField> evens, odds;
    for (const auto& g : m.generators)
        (g.parity() == Parity::Even ? evens : odds).push_back(g);
    auto mix = [&](std::vector<SuperVectorField>& v) {
        int n = static_cast<int>(v.size());
        std::vector<SuperVectorField> out;
        for (int i = 0; i < n; ++i) {
            SuperVectorField acc = v[i];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                int c = rng.range(-2, 2);
                if (!c) continue;
                acc = acc + v[j].scale(Rational(c));
            }
            out.push_back(acc);
        }
        return out;
    };
    Model m2 = m;
    m2.generators.clear();
    for (auto& g : mix(evens)) m2.generators.push_back(g);
    for (auto& g : mix(odds)) m2.generators.push_back(g);
    m2.annihilator = m.annihilator;
    auto rep = symbol_components(m2, m.points.at("base"));
    CHECK(rep.classification == "M1");
}

TEST_CASE("the symmetry solver recovers the classical 14-dimensional algebra") {
    Model hc = models::hc_classical_model();
    auto res = solve_symmetries(hc, 6, -3, 3);
    CHECK(res.total == std::pair<int, int>{14, 0});
    CHECK(res.closed);
    CHECK_FALSE(res.truncated);
    std::map<int, int> dims;
    for (const auto& blk : res.blocks) dims[blk.degree] = blk.even;
    std::map<int, int> want = {{-3, 2}, {-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}, {3, 2}};
    CHECK(dims == want);
}

TEST_CASE("the symmetry solver finds the full (17|14) for the flat model") {
    Model shc = models::shc_model();
    auto t0 = std::chrono::steady_clock::now();
    auto res = solve_symmetries(shc, 6, -3, 3);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    MESSAGE("solve time ", secs, "s");
    CHECK(res.total == std::pair<int, int>{17, 14});
    CHECK(res.closed);
    CHECK_FALSE(res.truncated);
    std::map<int, std::pair<int, int>> dims;
    for (const auto& blk : res.blocks) dims[blk.degree] = {blk.even, blk.odd};
    std::map<int, std::pair<int, int>> want = {{-3, {2, 0}}, {-2, {1, 2}}, {-1, {2, 4}},
                                               {0, {7, 2}},  {1, {2, 4}},  {2, {1, 2}},
                                               {3, {2, 0}}};
    CHECK(dims == want);
    // the solved space contains every shipped generator
    for (const auto& g : models::shc_symmetries()) CHECK(solution_contains(res, g));
}

TEST_CASE("the symmetry solver confirms the (10|8) gap for m = 3") {
    Model sub = models::submax_model(3);
    auto res = solve_symmetries(sub, 6, -2, 0);
    CHECK(res.total == std::pair<int, int>{10, 8});
    CHECK(res.closed);
    CHECK(res.truncated);  // weight-0 coordinates clip the ansatz pools
    std::map<int, std::pair<int, int>> dims;
    for (const auto& blk : res.blocks) dims[blk.degree] = {blk.even, blk.odd};
    std::map<int, std::pair<int, int>> want = {{-2, {1, 0}}, {-1, {4, 4}}, {0, {5, 4}}};
    CHECK(dims == want);
    for (const auto& g : models::submax_symmetries(3)) CHECK(solution_contains(res, g));
}
