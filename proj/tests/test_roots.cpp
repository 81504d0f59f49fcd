#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supergeom/roots.hpp"

using namespace sg;

TEST_CASE("root counts and pairing normalization") {
    RootDatumG3 rd;
    CHECK(rd.even_roots().size() == 14);
    CHECK(rd.odd_roots().size() == 14);
    Root delta{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1}, e3{0, -1, -1};
    CHECK(pairing(delta, delta) == 2);
    CHECK(pairing(e1, e1) == -2);
    CHECK(pairing(e1, e2) == 1);
    CHECK(pairing(e2, e3) == 1);
    CHECK(pairing(e1, delta) == 0);
    // odd roots delta +- eps_i are isotropic, delta itself is not
    CHECK(pairing(delta + e3, delta + e3) == 0);
    CHECK(pairing(delta, delta) != 0);
}

TEST_CASE("each simple system generates a positive system of 7+7 roots") {
    RootDatumG3 rd;
    for (const auto& name : RootDatumG3::system_names()) {
        const auto& s = rd.system(name);
        for (int i = 0; i < 3; ++i) {
            Parity p;
            REQUIRE(rd.is_root(s.alpha[i], &p));
            CHECK(p == s.parity[i]);
        }
        CHECK(rd.positive_roots(s, Parity::Even).size() == 7);
        CHECK(rd.positive_roots(s, Parity::Odd).size() == 7);
    }
}

TEST_CASE("even reflections preserve the even and odd root sets") {
    RootDatumG3 rd;
    for (const auto& alpha : rd.even_roots()) {
        for (const auto& beta : rd.even_roots()) {
            Root r = rd.even_reflect(alpha, beta);
            Parity p;
            REQUIRE(rd.is_root(r, &p));
            CHECK(p == Parity::Even);
        }
        for (const auto& beta : rd.odd_roots()) {
            Root r = rd.even_reflect(alpha, beta);
            Parity p;
            REQUIRE(rd.is_root(r, &p));
            CHECK(p == Parity::Odd);
        }
    }
}

TEST_CASE("odd reflections realize the arrows I<->II, II<->III, III<->IV") {
    RootDatumG3 rd;
    std::string to;
    rd.odd_reflect(rd.system("I"), 0, &to);  // at alpha_1 = delta + eps_3
    CHECK(to == "II");
    rd.odd_reflect(rd.system("II"), 1, &to);
    CHECK(to == "III");
    rd.odd_reflect(rd.system("III"), 1, &to);
    CHECK(to == "IV");
    // the arrow back
    auto s2 = rd.odd_reflect(rd.system("IV"), 1, &to);
    CHECK(to == "III");
    (void)s2;
    // non-isotropic odd root is rejected (alpha_3 = delta in system IV)
    CHECK_THROWS(rd.odd_reflect(rd.system("IV"), 2, &to));
    // even simple root is rejected as an odd reflection
    CHECK_THROWS(rd.odd_reflect(rd.system("IV"), 0, &to));
}

TEST_CASE("parabolic growth vectors reproduce the atlas") {
    RootDatumG3 rd;
    for (const auto& row : flag_atlas()) {
        CAPTURE(row.label);
        auto got = rd.parabolic_growth(rd.system(row.system), row.marked);
        CHECK(got == row.growth);
    }
}

TEST_CASE("aliases of the same flag variety give the same growth") {
    RootDatumG3 rd;
    auto growth = [&](const std::string& sys, std::vector<int> A) {
        return rd.parabolic_growth(rd.system(sys), A);
    };
    CHECK(growth("I", {3}) == growth("II", {3}));
    CHECK(growth("I", {3}) == growth("III", {2}));
    CHECK(growth("III", {1}) == growth("IV", {1}));
    CHECK(growth("II", {1}) == growth("III", {3}));
    CHECK(growth("II", {1}) == growth("IV", {3}));
    CHECK(growth("I", {2}) == growth("II", {2}));
    CHECK(growth("II", {1, 3}) == growth("III", {2, 3}));
    CHECK(growth("III", {1, 3}) == growth("IV", {1, 3}));
    CHECK(growth("I", {2, 3}) == growth("II", {2, 3}));
}

TEST_CASE("growth plus degree-zero part always totals (17|14)") {
    RootDatumG3 rd;
    std::vector<std::vector<int>> subsets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (const auto& name : RootDatumG3::system_names()) {
        for (const auto& A : subsets) {
            auto g = rd.parabolic_growth(rd.system(name), A);
            auto z = rd.parabolic_dim0(rd.system(name), A);
            int even = z.first, odd = z.second;
            for (auto [e, o] : g) {
                even += 2 * e;  // negative and positive parts are dual
                odd += 2 * o;
            }
            CHECK(even == 17);
            CHECK(odd == 14);
        }
    }
}
