#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "supergeom/report.hpp"
#include "supergeom/roots.hpp"
#include "test_util.hpp"

using namespace sg;

static std::string repo(const std::string& rel) { return sgt::data_root() + "/" + rel; }

static std::pair<int, std::string> run_cli(const std::string& args) {
    const char* bin = std::getenv("SUPERGEOM_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

TEST_CASE("shipped model files agree with the built-in constructors") {
    for (const char* name :
         {"shc", "hc-classical", "g3contact-system", "g3system-rank22", "flat-contact-22",
          "submax-m2", "submax-m3", "submax-m4", "submax-m5"}) {
        CAPTURE(name);
        Model built = models::model_by_name(name);
        Model loaded = load_model_file(repo("models/" + std::string(name) + ".json"));
        REQUIRE(loaded.chart->size() == built.chart->size());
        REQUIRE(loaded.generators.size() == built.generators.size());
        for (size_t i = 0; i < built.generators.size(); ++i) {
            CHECK(loaded.generators[i].parity() == built.generators[i].parity());
            for (int c = 0; c < built.chart->size(); ++c) {
                // compare by transporting over the loaded chart
                auto a = built.generators[i].coeff(c).transport(loaded.chart);
                auto b = loaded.generators[i].coeff(
                    loaded.chart->require(built.chart->var(c).name));
                CHECK(a == b);
            }
        }
        REQUIRE(loaded.annihilator.size() == built.annihilator.size());
        CHECK(loaded.points.size() == built.points.size());
        CHECK(loaded.expected_growth == built.expected_growth);
    }
}

TEST_CASE("the atlas data file matches the root-datum computation") {
    std::ifstream in(repo("data/flag_growth.json"));
    REQUIRE(in.good());
    nlohmann::json atlas;
    in >> atlas;
    RootDatumG3 rd;
    int rows = 0;
    for (const auto& row : flag_atlas()) {
        REQUIRE(atlas.contains(row.label));
        auto got = rd.parabolic_growth(rd.system(row.system), row.marked);
        std::vector<std::pair<int, int>> file;
        for (const auto& g : atlas.at(row.label))
            file.emplace_back(g.at(0).get<int>(), g.at(1).get<int>());
        CHECK(got == file);
        ++rows;
    }
    CHECK(rows == 19);
}

TEST_CASE("the generating-function data file matches the built-in table") {
    std::ifstream in(repo("data/g3_contact_functions.json"));
    REQUIRE(in.good());
    nlohmann::json funcs;
    in >> funcs;
    const auto& table = models::g3_contact_functions();
    REQUIRE(funcs.size() == table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        CHECK(funcs[i].at("name").get<std::string>() == table[i].name);
        CHECK(funcs[i].at("expr").get<std::string>() == table[i].expr);
        CHECK(funcs[i].at("degree").get<int>() == table[i].degree);
    }
}

TEST_CASE("growth subcommand prints the expected vector and exit code") {
    auto [rc, out] = run_cli("growth --parabolic IV:2");
    CHECK(rc == 0);
    CHECK(out.find("(2|4,1|2,2|0)") != std::string::npos);
    auto [rc2, out2] = run_cli("growth --parabolic I:1");
    CHECK(rc2 == 0);
    CHECK(out2.find("(0|7,1|0)") != std::string::npos);
    auto [rc3, out3] = run_cli("growth --parabolic II:123");
    CHECK(rc3 == 0);
    CHECK(out3.find("(1|2,1|1,1|0,0|1,1|0,0|1,1|1,2|0,0|1)") != std::string::npos);
}

TEST_CASE("growth --all diffs against the shipped atlas") {
    auto [rc, out] = run_cli("growth --all --atlas " + repo("data/flag_growth.json"));
    CHECK(rc == 0);
    CHECK(out.find("MISMATCH") == std::string::npos);
    CHECK(out.find("P2^IV") != std::string::npos);
}

TEST_CASE("cohomology subcommand prints the curvature dimension") {
    auto [rc, out] = run_cli("cohomology --grading p2iv --n 2 --d 2");
    CHECK(rc == 0);
    CHECK(out.find("even 3, odd 0") != std::string::npos);
}

TEST_CASE("bad input gives exit code 2") {
    auto [rc, out] = run_cli("growth --parabolic V:9");
    CHECK(rc == 2);
    (void)out;
    auto [rc2, out2] = run_cli("symbol --model no-such-model");
    CHECK(rc2 == 2);
    (void)out2;
}

TEST_CASE("solve runs on a model file path") {
    auto [rc, out] = run_cli("solve --model " + repo("models/hc-classical.json") +
                             " --bound 6 --degrees -3..3");
    CHECK(rc == 0);
    CHECK(out.find("total (14|0)") != std::string::npos);
}

TEST_CASE("symbol subcommand classifies the shipped models") {
    auto [rc, out] = run_cli("symbol --model shc");
    CHECK(rc == 0);
    CHECK(out.find("classification M1") != std::string::npos);
    auto [rc2, out2] = run_cli("symbol --model " + repo("models/submax-m3.json"));
    CHECK(rc2 == 0);
    CHECK(out2.find("classification M1") != std::string::npos);
}

TEST_CASE("reports are byte-stable across runs") {
    auto a = run_cli("verify identities");
    auto b = run_cli("verify identities");
    CHECK(a.first == 0);
    // strip the timing line before comparing
    auto strip = [](std::string s) {
        auto p = s.find("\"timing_ms\"");
        if (p != std::string::npos) {
            auto e = s.find('\n', p);
            s.erase(p, e - p + 1);
        }
        return s;
    };
    CHECK(strip(a.second) == strip(b.second));
}

TEST_CASE("verify submax fails cleanly outside the valid range") {
    auto [rc, out] = run_cli("verify submax --m 1");
    CHECK(rc == 2);
    (void)out;
}

TEST_CASE("graded algebra export/import round trip") {
    auto res = lsa_from_vector_fields(models::shc_symmetries());
    REQUIRE(res.closed);
    auto j = lsa_to_json(res.algebra);
    GradedLSA back = lsa_from_json(j);
    CHECK(back.dim() == res.algebra.dim());
    CHECK(back.graded_dims() == res.algebra.graded_dims());
    for (int i = 0; i < back.dim(); ++i)
        for (int k = 0; k < back.dim(); ++k)
            CHECK(back.bracket(i, k) == res.algebra.bracket(i, k));
    std::string w;
    CHECK(back.check_jacobi(&w));
}
