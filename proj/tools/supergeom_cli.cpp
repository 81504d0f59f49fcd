// Command-line driver: model verification, cohomology, prolongation, growth
// vectors and the symmetry solver, with deterministic JSON reports.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "supergeom/cubic.hpp"
#include "supergeom/distribution.hpp"
#include "supergeom/parser.hpp"
#include "supergeom/prolong.hpp"
#include "supergeom/report.hpp"
#include "supergeom/roots.hpp"
#include "supergeom/solver.hpp"
#include "supergeom/spencer.hpp"

using namespace sg;

namespace {

int emit(Report& rep, const std::string& output,
         std::chrono::steady_clock::time_point t0) {
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    std::string text = rep.to_json().dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        out << text;
    }
    return rep.status == "fail" ? 1 : 0;
}

Model resolve_model(const std::string& ref) {
    if (ref.find('/') != std::string::npos || ref.size() > 5 && ref.substr(ref.size() - 5) == ".json")
        return load_model_file(ref);
    try {
        return models::model_by_name(ref);
    } catch (const std::invalid_argument&) {
        return load_model_file(ref);
    }
}

const GradedLSA& algebra_for(const std::string& grading) {
    if (grading == "p2iv") {
        static GradedLSA L = [] {
            auto r = lsa_from_vector_fields(models::shc_symmetries());
            if (!r.closed) throw std::runtime_error(r.failure);
            return r.algebra;
        }();
        return L;
    }
    if (grading == "p1iv") {
        static GradedLSA L = [] {
            auto J = g3_jets();
            std::vector<SuperPolynomial> funcs;
            for (const auto& nf : models::g3_contact_functions())
                funcs.push_back(parse_expression(J.j1(), nf.expr));
            auto r = lagrange_algebra(J, funcs);
            if (!r.closed) throw std::runtime_error(r.failure);
            return r.algebra;
        }();
        return L;
    }
    throw CLI::ValidationError("--grading must be p2iv or p1iv");
}

nlohmann::json growth_json(const std::vector<std::pair<int, int>>& g) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [e, o] : g) j.push_back({e, o});
    return j;
}

std::string growth_str(const std::vector<std::pair<int, int>>& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i].first) + "|" + std::to_string(g[i].second);
    }
    return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for graded superdistribution geometry"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output", output, "write the JSON report to a file");

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->require_subcommand(1);
    int submax_m = 3;
    auto* v_shc = verify->add_subcommand("shc", "internal symmetries of the flat (2|4) model");
    auto* v_ct = verify->add_subcommand("g3contact", "tangency of the contact symmetry table");
    auto* v_id = verify->add_subcommand("identities", "cubic form identities");
    auto* v_osp = verify->add_subcommand("osp32", "orthosymplectic structure suite");
    auto* v_sub = verify->add_subcommand("submax", "submaximal generator suite");
    v_sub->add_option("--m", submax_m, "integer exponent (>= 2)")->required();
    auto* v_sol = verify->add_subcommand("solutions", "solution family of the flat model");

    // ---- cohomology ------------------------------------------------------
    auto* coh = app.add_subcommand("cohomology", "Spencer cohomology dimensions");
    std::string grading = "p2iv", drange = "0..2";
    int nn = 1;
    bool restricted = false;
    coh->add_option("--grading", grading, "p2iv or p1iv")->required();
    coh->add_option("--n", nn, "cochain order (1 or 2)")->required();
    coh->add_option("--d", drange, "degree or range LO..HI")->required();
    coh->add_flag("--restricted", restricted, "restricted subcomplex");
    bool representatives = false;
    coh->add_flag("--representatives", representatives,
                  "export echelonized cocycle representatives");

    // ---- algebra ---------------------------------------------------------
    auto* algebra = app.add_subcommand("algebra",
                                       "export a graded algebra as sparse bracket records");
    std::string agrading = "p2iv";
    algebra->add_option("--grading", agrading, "p2iv or p1iv")->required();

    // ---- growth ----------------------------------------------------------
    auto* growth = app.add_subcommand("growth", "parabolic growth vectors from root data");
    std::string parabolic;
    bool all_rows = false;
    std::string atlas_file;
    growth->add_option("--parabolic", parabolic, "SYS:SET, e.g. IV:2 or I:1,3");
    growth->add_flag("--all", all_rows, "all 19 flag varieties");
    growth->add_option("--atlas", atlas_file, "atlas data file to diff against");

    // ---- prolong ---------------------------------------------------------
    auto* prolong = app.add_subcommand("prolong", "Tanaka prolongation of a symbol");
    std::string pmodel = "shc-symbol", g0name = "auto";
    int maxdeg = 4;
    prolong->add_option("--model", pmodel, "shc-symbol | contact-symbol | M1..M4")->required();
    prolong->add_option("--max-degree", maxdeg, "top degree to compute")->required();
    prolong->add_option("--g0", g0name, "auto | cosp32 | none");

    // ---- symbol ----------------------------------------------------------
    auto* symbol = app.add_subcommand("symbol", "growth and symbol classification");
    std::string smodel, spoint;
    symbol->add_option("--model", smodel, "model name or file")->required();
    symbol->add_option("--point", spoint, "named classical point");

    // ---- solve -----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "symmetry solver by weighted degree");
    std::string omodel, degrees = "-3..3";
    int bound = 6;
    solve->add_option("--model", omodel, "model name or file")->required();
    solve->add_option("--bound", bound, "total-degree cap of the ansatz");
    solve->add_option("--degrees", degrees, "weighted degree range LO..HI");

    // ---- suite -----------------------------------------------------------
    auto* suite = app.add_subcommand("suite", "run a test suite");
    suite->require_subcommand(1);
    suite->add_subcommand("acceptance", "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
        if (v_shc->parsed()) {
            rep.task = "verify shc";
            Model model = models::shc_model();
            auto fields = models::shc_symmetries();
            std::vector<std::string> fails(fields.size());
            parallel_for_index(static_cast<int>(fields.size()), [&](int i) {
                std::string w;
                if (!annihilator_symmetry_check(fields[i], model, &w)) fails[i] = w;
            });
            for (size_t i = 0; i < fails.size(); ++i)
                if (!fails[i].empty()) {
                    rep.status = "fail";
                    rep.witness = "generator " + std::to_string(i) + ": " + fails[i];
                }
            auto res = lsa_from_vector_fields(fields);
            std::string w;
            if (!res.closed || !res.algebra.check_jacobi(&w)) {
                rep.status = "fail";
                rep.witness = res.closed ? w : res.failure;
            }
            nlohmann::json dims = nlohmann::json::object();
            for (const auto& [d, p] : res.algebra.graded_dims())
                dims[std::to_string(d)] = {p.first, p.second};
            rep.results["graded_dims"] = dims;
            rep.results["dimension"] = {17, 14};
            rep.results["killing_rank"] = res.algebra.killing_rank();
        } else if (v_ct->parsed()) {
            rep.task = "verify g3contact";
            auto eq = build_g3_equation();
            auto t = eq.jets.j1();
            const auto& funcs = models::g3_contact_functions();
            std::vector<std::string> fails(funcs.size());
            parallel_for_index(static_cast<int>(funcs.size()), [&](int i) {
                std::string w;
                SuperPolynomial f = parse_expression(t, funcs[i].expr);
                if (!eq.jets.tangency_check(f, eq.relations, eq.solved, &w))
                    fails[i] = funcs[i].name + ": " + w;
            });
            nlohmann::json per = nlohmann::json::object();
            for (size_t i = 0; i < funcs.size(); ++i) {
                per[funcs[i].name] = fails[i].empty() ? "pass" : "fail";
                if (!fails[i].empty()) {
                    rep.status = "fail";
                    rep.witness = fails[i];
                }
            }
            rep.results["tangency"] = per;
            std::vector<SuperPolynomial> fs;
            for (const auto& nf : funcs) fs.push_back(parse_expression(t, nf.expr));
            auto res = lagrange_algebra(eq.jets, fs);
            if (!res.closed) {
                rep.status = "fail";
                rep.witness = res.failure;
            } else {
                nlohmann::json dims = nlohmann::json::object();
                for (const auto& [d, p] : res.algebra.graded_dims())
                    dims[std::to_string(d)] = {p.first, p.second};
                rep.results["lagrange_graded_dims"] = dims;
            }
        } else if (v_id->parsed()) {
            rep.task = "verify identities";
            auto ids = verify_key_identities();
            rep.results["id1"] = ids.id1;
            rep.results["id2"] = ids.id2;
            rep.results["id3"] = ids.id3;
            rep.results["restricted_id1"] = ids.restricted_id1;
            if (!ids.all()) {
                rep.status = "fail";
                rep.witness = ids.witness;
            }
        } else if (v_osp->parsed()) {
            rep.task = "verify osp32";
            auto osp = osp32_checks();
            rep.results["invariance"] = osp.invariance_ok;
            rep.results["wrong_scale_fails"] = osp.wrong_scale_fails;
            rep.results["wrong_scale_witness"] = osp.wrong_scale_witness;
            rep.results["closes"] = osp.closes;
            rep.results["span_dim"] = {osp.span_dim.first, osp.span_dim.second};
            rep.results["kaplansky"] = osp.kaplansky_ok;
            std::string w;
            rep.results["cubic_parametrization"] = twisted_cubic_parametrization_ok(&w);
            rep.results["lagrangian_family"] = lagrangian_family_isotropic(&w);
            if (!osp.all()) {
                rep.status = "fail";
                rep.witness = osp.note;
            }
        } else if (v_sub->parsed()) {
            rep.task = "verify submax";
            auto r = verify_submaximal_generators(submax_m);
            rep.results["m"] = submax_m;
            rep.results["symmetries"] = r.symmetries_ok;
            rep.results["closed"] = r.closed;
            rep.results["jacobi"] = r.jacobi;
            rep.results["dims"] = {r.dims.first, r.dims.second};
            rep.results["sp2_split"] = r.sp2_split;
            if (!(r.all() && r.dims == std::pair<int, int>{10, 8})) {
                rep.status = "fail";
                rep.witness = r.witness;
            }
        } else if (v_sol->parsed()) {
            rep.task = "verify solutions";
            auto r = verify_solutions();
            rep.results["family_satisfies"] = r.family_satisfies;
            rep.results["free_parameters"] = r.free_parameters;
            rep.results["residuals_vanish"] = r.residuals_vanish;
            if (!r.all()) {
                rep.status = "fail";
                rep.witness = r.witness;
            }
        } else if (coh->parsed()) {
            rep.task = "cohomology";
            const GradedLSA& L = algebra_for(grading);
            SpencerComplex sc(L);
            int lo, hi;
            auto pos = drange.find("..");
            if (pos == std::string::npos) {
                lo = hi = std::stoi(drange);
            } else {
                lo = std::stoi(drange.substr(0, pos));
                hi = std::stoi(drange.substr(pos + 2));
            }
            nlohmann::json table = nlohmann::json::object();
            for (int d = lo; d <= hi; ++d) {
                auto h = sc.H(d, nn, restricted);
                table[std::to_string(d)] = {h.first, h.second};
                std::cout << "H^{" << d << "," << nn << "}"
                          << (restricted ? " (restricted)" : "") << " = even " << h.first
                          << ", odd " << h.second << "\n";
            }
            rep.results["grading"] = grading;
            rep.results["n"] = nn;
            rep.results["restricted"] = restricted;
            rep.results["H"] = table;
            if (representatives) {
                nlohmann::json reps = nlohmann::json::object();
                for (int d = lo; d <= hi; ++d) {
                    nlohmann::json per_parity = nlohmann::json::object();
                    for (Parity p : {Parity::Even, Parity::Odd}) {
                        auto basis = sc.block(nn, d, p, restricted);
                        auto mat = sc.differential(nn, d, p, restricted);
                        EqSystem sys(static_cast<int>(basis.elems.size()));
                        std::map<int64_t, SVec> rows;
                        for (size_t c = 0; c < mat.cols.size(); ++c)
                            for (const auto& [r, v] : mat.cols[c].e)
                                rows[r].add(static_cast<int64_t>(c), v);
                        for (auto& [r, eq] : rows) sys.add_equation(std::move(eq));
                        nlohmann::json list = nlohmann::json::array();
                        for (const auto& ker : sys.kernel_basis()) {
                            nlohmann::json vec = nlohmann::json::array();
                            for (size_t i = 0; i < ker.size(); ++i) {
                                if (ker[i].is_zero()) continue;
                                nlohmann::json slots = nlohmann::json::array();
                                for (int idx : basis.elems[i].first) slots.push_back(idx);
                                vec.push_back({{"slots", slots},
                                               {"target", basis.elems[i].second},
                                               {"value", ker[i].to_string()}});
                            }
                            list.push_back(vec);
                        }
                        per_parity[p == Parity::Even ? "even" : "odd"] = list;
                    }
                    reps[std::to_string(d)] = per_parity;
                }
                rep.results["cocycle_representatives"] = reps;
            }
        } else if (algebra->parsed()) {
            rep.task = "algebra";
            rep.results["grading"] = agrading;
            rep.results["algebra"] = lsa_to_json(algebra_for(agrading));
        } else if (growth->parsed()) {
            rep.task = "growth";
            RootDatumG3 rd;
            if (all_rows) {
                bool ok = true;
                nlohmann::json rows = nlohmann::json::object();
                // optional diff against a shipped atlas data file
                nlohmann::json atlas;
                if (!atlas_file.empty()) {
                    std::ifstream in(atlas_file);
                    if (!in) throw std::runtime_error("cannot open atlas file " + atlas_file);
                    in >> atlas;
                }
                for (const auto& row : flag_atlas()) {
                    auto got = rd.parabolic_growth(rd.system(row.system), row.marked);
                    bool match = got == row.growth;
                    if (!atlas.is_null()) {
                        std::vector<std::pair<int, int>> file_growth;
                        for (const auto& g : atlas.at(row.label))
                            file_growth.emplace_back(g.at(0).get<int>(), g.at(1).get<int>());
                        match = match && got == file_growth;
                    }
                    rows[row.label] = {{"growth", growth_json(got)}, {"match", match}};
                    std::cout << row.label << " " << growth_str(got)
                              << (match ? "" : "  MISMATCH") << "\n";
                    if (!match) {
                        ok = false;
                        rep.witness = "row " + row.label;
                    }
                }
                rep.results["rows"] = rows;
                if (!ok) rep.status = "fail";
            } else {
                auto colon = parabolic.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--parabolic expects SYS:SET, e.g. IV:2");
                std::string sys = parabolic.substr(0, colon);
                std::vector<int> marked;
                for (char c : parabolic.substr(colon + 1))
                    if (c >= '1' && c <= '3') marked.push_back(c - '0');
                auto got = rd.parabolic_growth(rd.system(sys), marked);
                std::cout << growth_str(got) << "\n";
                rep.results["parabolic"] = parabolic;
                rep.results["growth"] = growth_json(got);
                rep.results["dim0"] = {rd.parabolic_dim0(rd.system(sys), marked).first,
                                       rd.parabolic_dim0(rd.system(sys), marked).second};
            }
        } else if (prolong->parsed()) {
            rep.task = "prolong";
            GradedLSA m = pmodel == "shc-symbol"
                              ? models::symbol_model("M1")
                              : (pmodel == "contact-symbol" ? models::contact_symbol()
                                                            : models::symbol_model(pmodel));
            ProlongationResult r;
            if (g0name == "auto") {
                r = tanaka_prolongation(m, nullptr, maxdeg);
            } else if (g0name == "cosp32") {
                auto g0 = cosp32_derivations();
                r = tanaka_prolongation(m, &g0, maxdeg);
            } else if (g0name == "none") {
                std::vector<Derivation> zero;
                r = tanaka_prolongation(m, &zero, maxdeg);
            } else {
                throw CLI::ValidationError("--g0 must be auto, cosp32 or none");
            }
            rep.results["model"] = pmodel;
            rep.results["dim0"] = {r.dim0.first, r.dim0.second};
            nlohmann::json dims = nlohmann::json::array();
            for (auto [e, o] : r.dims) dims.push_back({e, o});
            rep.results["dims"] = dims;
            rep.results["terminated"] = r.terminated;
            rep.results["total"] = {r.total().first, r.total().second};
            if (!r.terminated) rep.status = "truncated";
            std::cout << "g0 = (" << r.dim0.first << "|" << r.dim0.second << ")";
            for (size_t k = 0; k < r.dims.size(); ++k)
                std::cout << ", g" << (k + 1) << " = (" << r.dims[k].first << "|"
                          << r.dims[k].second << ")";
            std::cout << (r.terminated ? ", terminated" : ", NOT terminated") << "\n";
        } else if (symbol->parsed()) {
            rep.task = "symbol";
            Model m = resolve_model(smodel);
            std::string pname = spoint.empty() ? m.default_point : spoint;
            if (!m.points.count(pname))
                throw std::runtime_error("model has no point named " + pname);
            auto r = symbol_components(m, m.points.at(pname));
            rep.results["model"] = m.name;
            rep.results["point"] = pname;
            rep.results["growth"] = growth_json(r.growth);
            rep.results["bracket_generating"] = r.bracket_generating;
            rep.results["classification"] = r.classification;
            rep.results["jacobi"] = r.jacobi_ok;
            rep.results["F"] = {r.f1, r.f2, r.f3};
            rep.results["N"] = {r.n1, r.n2};
            auto mat = [](const std::vector<std::vector<Rational>>& m) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : m) {
                    nlohmann::json r2 = nlohmann::json::array();
                    for (const auto& v : row) r2.push_back(v.to_string());
                    rows.push_back(r2);
                }
                return rows;
            };
            if (!r.omega.empty()) {
                nlohmann::json comps;
                comps["omega"] = mat(r.omega);
                comps["q"] = mat(r.q);
                comps["beta"] = mat(r.beta);
                nlohmann::json xi = nlohmann::json::array();
                for (const auto& row : r.Xi) xi.push_back(mat(row));
                comps["Xi"] = xi;
                nlohmann::json th = nlohmann::json::array();
                for (const auto& row : r.Theta) th.push_back(mat(row));
                comps["Theta"] = th;
                rep.results["components"] = comps;
            }
            rep.results["structure_constant_witness"] = r.structure_constant;
            std::cout << "growth " << growth_str(r.growth) << ", classification "
                      << r.classification << "\n";
            if (!m.expected_symbol.empty() && r.classification != m.expected_symbol) {
                rep.status = "fail";
                rep.witness = "expected " + m.expected_symbol;
            }
        } else if (solve->parsed()) {
            rep.task = "solve";
            Model m = resolve_model(omodel);
            auto pos = degrees.find("..");
            int lo = std::stoi(degrees.substr(0, pos));
            int hi = std::stoi(degrees.substr(pos + 2));
            auto r = solve_symmetries(m, bound, lo, hi);
            rep.results["model"] = m.name;
            rep.results["bound"] = bound;
            nlohmann::json blocks = nlohmann::json::object();
            for (const auto& blk : r.blocks) {
                blocks[std::to_string(blk.degree)] = {blk.even, blk.odd};
                std::cout << "degree " << blk.degree << ": (" << blk.even << "|" << blk.odd
                          << ")\n";
            }
            std::cout << "total (" << r.total.first << "|" << r.total.second << ")"
                      << (r.truncated ? ", truncated" : "") << "\n";
            rep.results["blocks"] = blocks;
            rep.results["total"] = {r.total.first, r.total.second};
            rep.results["closed"] = r.closed;
            rep.results["truncated"] = r.truncated;
            if (r.truncated) rep.status = "truncated";
            if (!r.closed) {
                rep.status = "fail";
                rep.witness = r.note;
            }
        } else if (suite->parsed()) {
            rep.task = "suite acceptance";
            int failed = run_acceptance(std::cout, true);
            rep.results["failed"] = failed;
            if (failed) {
                rep.status = "fail";
                rep.witness = std::to_string(failed) + " criterion(s) failed";
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return emit(rep, output, t0);
}
