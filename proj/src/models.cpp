#include "supergeom/models.hpp"

#include "supergeom/parser.hpp"

namespace sg::models {

namespace {

SuperVectorField make_field(const TablePtr& t, Parity p,
                            const std::vector<std::pair<std::string, std::string>>& coeffs) {
    SuperVectorField X(t, p);
    for (const auto& [coord, expr] : coeffs) X.set_coeff(coord, parse_expression(t, expr));
    if (!X.parity_consistent())
        throw std::logic_error("make_field: parity-inconsistent field on d_" + coeffs[0].first);
    return X;
}

SuperOneForm make_form(const TablePtr& t, Parity p,
                       const std::vector<std::pair<std::string, std::string>>& coeffs) {
    SuperOneForm s(t, p);
    for (const auto& [coord, expr] : coeffs) s.set_coeff(coord, parse_expression(t, expr));
    return s;
}

}  // namespace

TablePtr shc_chart() {
    static TablePtr t = VariableTable::make({{"x", Parity::Even, 1},
                                             {"u", Parity::Even, 3},
                                             {"u_x", Parity::Even, 2},
                                             {"u_xx", Parity::Even, 1},
                                             {"z", Parity::Even, 3},
                                             {"tau", Parity::Odd, 1},
                                             {"nu", Parity::Odd, 1},
                                             {"u_tau", Parity::Odd, 2},
                                             {"u_nu", Parity::Odd, 2},
                                             {"u_xtau", Parity::Odd, 1},
                                             {"u_xnu", Parity::Odd, 1}});
    return t;
}

// Chart for the submaximal family: the same coordinates with the weights that
// make the super-Monge distribution weighted-homogeneous (u_xx has weight 0).
static TablePtr submax_chart() {
    static TablePtr t = VariableTable::make({{"x", Parity::Even, 1},
                                             {"u", Parity::Even, 2},
                                             {"u_x", Parity::Even, 1},
                                             {"u_xx", Parity::Even, 0},
                                             {"z", Parity::Even, 1},
                                             {"tau", Parity::Odd, 1},
                                             {"nu", Parity::Odd, 1},
                                             {"u_tau", Parity::Odd, 1},
                                             {"u_nu", Parity::Odd, 1},
                                             {"u_xtau", Parity::Odd, 0},
                                             {"u_xnu", Parity::Odd, 0}});
    return t;
}

FGHKData shc_fghk() {
    auto t = shc_chart();
    FGHKData d;
    d.F = parse_expression(t, "1/2*u_xx^2 + u_xnu*u_xtau");
    d.G = parse_expression(t, "u_xx*u_xnu");
    d.H = parse_expression(t, "u_xx*u_xtau");
    d.K = parse_expression(t, "-u_xx");
    return d;
}

FGHKData monge_fghk(int m) {
    if (m < 1) throw std::invalid_argument("monge_fghk: m >= 1 expected");
    auto t = m == 2 ? shc_chart() : submax_chart();
    auto uxx = SuperPolynomial::variable(t, "u_xx");
    FGHKData d;
    d.F = uxx.pow(m) * Rational(1, m) + parse_expression(t, "u_xnu*u_xtau");
    d.G = uxx.pow(m - 1) * SuperPolynomial::variable(t, "u_xnu");
    d.H = uxx.pow(m - 1) * SuperPolynomial::variable(t, "u_xtau");
    d.K = -uxx.pow(m - 1);
    return d;
}

FGHKData zero_fghk() {
    auto t = shc_chart();
    FGHKData d;
    d.F = SuperPolynomial(t);
    d.G = SuperPolynomial(t);
    d.H = SuperPolynomial(t);
    d.K = SuperPolynomial(t);
    return d;
}

Model fghk_model(const FGHKData& d, const std::string& name) {
    auto t = d.F.table();
    if (!d.F.parity_homogeneous(Parity::Even) || !d.K.parity_homogeneous(Parity::Even) ||
        !d.G.parity_homogeneous(Parity::Odd) || !d.H.parity_homogeneous(Parity::Odd))
        throw std::invalid_argument("fghk_model: F, K must be even and G, H odd");
    Model m;
    m.name = name;
    m.chart = t;

    auto var = [&](const char* n) { return SuperPolynomial::variable(t, n); };
    auto one = SuperPolynomial::constant(t, Rational(1));

    SuperVectorField Dx(t, Parity::Even);
    Dx.set_coeff("x", one);
    Dx.set_coeff("u", var("u_x"));
    Dx.set_coeff("u_x", var("u_xx"));
    Dx.set_coeff("z", d.F);
    Dx.set_coeff("u_nu", var("u_xnu"));
    Dx.set_coeff("u_tau", var("u_xtau"));

    SuperVectorField Duxx(t, Parity::Even);
    Duxx.set_coeff("u_xx", one);

    SuperVectorField Dnu(t, Parity::Odd);
    Dnu.set_coeff("nu", one);
    Dnu.set_coeff("u", var("u_nu"));
    Dnu.set_coeff("u_x", var("u_xnu"));
    Dnu.set_coeff("z", d.G);
    Dnu.set_coeff("u_tau", d.K);

    SuperVectorField Duxnu(t, Parity::Odd);
    Duxnu.set_coeff("u_xnu", one);

    SuperVectorField Dtau(t, Parity::Odd);
    Dtau.set_coeff("tau", one);
    Dtau.set_coeff("u", var("u_tau"));
    Dtau.set_coeff("u_x", var("u_xtau"));
    Dtau.set_coeff("z", d.H);
    Dtau.set_coeff("u_nu", -d.K);

    SuperVectorField Duxtau(t, Parity::Odd);
    Duxtau.set_coeff("u_xtau", one);

    m.generators = {Dx, Duxx, Dnu, Duxnu, Dtau, Duxtau};

    // Annihilator of the Cartan system:
    //   dz - (dx)F - (dtau)H - (dnu)G,
    //   du - (dx)u_x - (dtau)u_tau - (dnu)u_nu,
    //   du_x - (dx)u_xx - (dtau)u_xtau - (dnu)u_xnu,
    //   du_tau - (dx)u_xtau - (dnu)K,
    //   du_nu - (dx)u_xnu + (dtau)K.
    SuperOneForm sz(t, Parity::Even);
    sz.set_coeff("z", one);
    sz.set_coeff("x", -d.F);
    sz.set_coeff("tau", -d.H);
    sz.set_coeff("nu", -d.G);
    SuperOneForm su(t, Parity::Even);
    su.set_coeff("u", one);
    su.set_coeff("x", -var("u_x"));
    su.set_coeff("tau", -var("u_tau"));
    su.set_coeff("nu", -var("u_nu"));
    SuperOneForm sux(t, Parity::Even);
    sux.set_coeff("u_x", one);
    sux.set_coeff("x", -var("u_xx"));
    sux.set_coeff("tau", -var("u_xtau"));
    sux.set_coeff("nu", -var("u_xnu"));
    SuperOneForm sut(t, Parity::Odd);
    sut.set_coeff("u_tau", one);
    sut.set_coeff("x", -var("u_xtau"));
    sut.set_coeff("nu", -d.K);
    SuperOneForm sun(t, Parity::Odd);
    sun.set_coeff("u_nu", one);
    sun.set_coeff("x", -var("u_xnu"));
    sun.set_coeff("tau", d.K);
    m.annihilator = {sz, su, sux, sut, sun};

    m.points["origin"] = {};
    m.points["base"] = {{t->require("u_xx"), Rational(1)}};
    return m;
}

Model shc_model() {
    Model m = fghk_model(shc_fghk(), "shc");
    m.expected_growth = {{2, 4}, {1, 2}, {2, 0}};
    m.expected_symbol = "M1";
    m.expected_symmetry = {17, 14};
    return m;
}

Model submax_model(int mm) {
    Model m = fghk_model(monge_fghk(mm), "submax-m" + std::to_string(mm));
    m.expected_growth = {{2, 4}, {1, 2}, {2, 0}};
    m.expected_symbol = mm == 1 ? "M2" : "M1";
    m.expected_symmetry = mm == 2 ? std::pair<int, int>{17, 14} : std::pair<int, int>{10, 8};
    return m;
}

Model hc_classical_model() {
    static TablePtr t = VariableTable::make({{"x", Parity::Even, 1},
                                             {"u", Parity::Even, 3},
                                             {"u_x", Parity::Even, 2},
                                             {"u_xx", Parity::Even, 1},
                                             {"z", Parity::Even, 3}});
    Model m;
    m.name = "hc-classical";
    m.chart = t;
    auto one = SuperPolynomial::constant(t, Rational(1));
    auto var = [&](const char* n) { return SuperPolynomial::variable(t, n); };
    SuperVectorField Dx(t, Parity::Even);
    Dx.set_coeff("x", one);
    Dx.set_coeff("u", var("u_x"));
    Dx.set_coeff("u_x", var("u_xx"));
    Dx.set_coeff("z", parse_expression(t, "1/2*u_xx^2"));
    SuperVectorField Duxx(t, Parity::Even);
    Duxx.set_coeff("u_xx", one);
    m.generators = {Dx, Duxx};
    m.annihilator = {
        make_form(t, Parity::Even, {{"u", "1"}, {"x", "-u_x"}}),
        make_form(t, Parity::Even, {{"u_x", "1"}, {"x", "-u_xx"}}),
        make_form(t, Parity::Even, {{"z", "1"}, {"x", "-1/2*u_xx^2"}}),
    };
    m.points["origin"] = {};
    m.points["base"] = {{t->require("u_xx"), Rational(1)}};
    m.expected_growth = {{2, 0}, {1, 0}, {2, 0}};
    m.expected_symmetry = {14, 0};
    return m;
}

Model flat_contact22_model() {
    static TablePtr t = VariableTable::make({{"x", Parity::Even, 1},
                                             {"y", Parity::Even, 1},
                                             {"nu", Parity::Odd, 1},
                                             {"tau", Parity::Odd, 1},
                                             {"u", Parity::Even, 2},
                                             {"u_x", Parity::Even, 1},
                                             {"u_y", Parity::Even, 1},
                                             {"u_nu", Parity::Odd, 1},
                                             {"u_tau", Parity::Odd, 1}});
    Model m;
    m.name = "flat-contact-22";
    m.chart = t;
    auto one = SuperPolynomial::constant(t, Rational(1));
    auto D = [&](const char* xi, const char* ui, Parity p) {
        SuperVectorField X(t, p);
        X.set_coeff(xi, one);
        X.set_coeff("u", SuperPolynomial::variable(t, ui));
        return X;
    };
    auto U = [&](const char* ui, Parity p) {
        SuperVectorField X(t, p);
        X.set_coeff(ui, one);
        return X;
    };
    m.generators = {D("x", "u_x", Parity::Even), D("y", "u_y", Parity::Even),
                    U("u_x", Parity::Even),      U("u_y", Parity::Even),
                    D("nu", "u_nu", Parity::Odd), D("tau", "u_tau", Parity::Odd),
                    U("u_nu", Parity::Odd),      U("u_tau", Parity::Odd)};
    m.annihilator = {make_form(
        t, Parity::Even,
        {{"u", "1"}, {"x", "-u_x"}, {"y", "-u_y"}, {"nu", "-u_nu"}, {"tau", "-u_tau"}})};
    m.points["origin"] = {};
    m.default_point = "origin";
    m.expected_growth = {{4, 4}, {1, 0}};
    return m;
}

static TablePtr g3system_chart() {
    static TablePtr t = VariableTable::make({{"x", Parity::Even, 1},
                                             {"y", Parity::Even, 2},
                                             {"u", Parity::Even, 5},
                                             {"u_x", Parity::Even, 4},
                                             {"u_y", Parity::Even, 3},
                                             {"lambda", Parity::Even, 1},
                                             {"nu", Parity::Odd, 2},
                                             {"tau", Parity::Odd, 2},
                                             {"u_nu", Parity::Odd, 3},
                                             {"u_tau", Parity::Odd, 3},
                                             {"theta", Parity::Odd, 1},
                                             {"phi", Parity::Odd, 1}});
    return t;
}

// The four truncated total derivatives on the (6|6) equation chart.
static std::vector<SuperVectorField> g3system_totals() {
    auto t = g3system_chart();
    std::vector<SuperVectorField> D;
    D.push_back(make_field(t, Parity::Even, {{"x", "1"},
                                             {"u", "u_x"},
                                             {"u_x", "1/3*lambda^3 + 2*theta*phi*lambda"},
                                             {"u_y", "1/2*lambda^2 + theta*phi"},
                                             {"u_nu", "lambda*phi"},
                                             {"u_tau", "-lambda*theta"}}));
    D.push_back(make_field(t, Parity::Even, {{"y", "1"},
                                             {"u", "u_y"},
                                             {"u_x", "1/2*lambda^2 + theta*phi"},
                                             {"u_y", "lambda"},
                                             {"u_nu", "phi"},
                                             {"u_tau", "-theta"}}));
    D.push_back(make_field(t, Parity::Odd, {{"nu", "1"},
                                            {"u", "u_nu"},
                                            {"u_x", "lambda*phi"},
                                            {"u_y", "phi"},
                                            {"u_tau", "-lambda"}}));
    D.push_back(make_field(t, Parity::Odd, {{"tau", "1"},
                                            {"u", "u_tau"},
                                            {"u_x", "-lambda*theta"},
                                            {"u_y", "-theta"},
                                            {"u_nu", "lambda"}}));
    return D;
}

static std::vector<SuperOneForm> g3system_annihilator() {
    auto t = g3system_chart();
    return {
        make_form(t, Parity::Even,
                  {{"u", "1"}, {"x", "-u_x"}, {"y", "-u_y"}, {"nu", "-u_nu"}, {"tau", "-u_tau"}}),
        make_form(t, Parity::Even, {{"u_x", "1"},
                                    {"x", "-(1/3*lambda^3 + 2*theta*phi*lambda)"},
                                    {"y", "-(1/2*lambda^2 + theta*phi)"},
                                    {"nu", "-lambda*phi"},
                                    {"tau", "lambda*theta"}}),
        make_form(t, Parity::Even, {{"u_y", "1"},
                                    {"x", "-(1/2*lambda^2 + theta*phi)"},
                                    {"y", "-lambda"},
                                    {"nu", "-phi"},
                                    {"tau", "theta"}}),
        make_form(t, Parity::Odd,
                  {{"u_nu", "1"}, {"x", "-lambda*phi"}, {"y", "-phi"}, {"tau", "-lambda"}}),
        make_form(t, Parity::Odd,
                  {{"u_tau", "1"}, {"x", "lambda*theta"}, {"y", "theta"}, {"nu", "lambda"}}),
    };
}

Model g3system_model() {
    auto t = g3system_chart();
    Model m;
    m.name = "g3contact-system";
    m.chart = t;
    auto D = g3system_totals();
    auto one = SuperPolynomial::constant(t, Rational(1));
    SuperVectorField dl(t, Parity::Even);
    dl.set_coeff("lambda", one);
    SuperVectorField dth(t, Parity::Odd);
    dth.set_coeff("theta", one);
    SuperVectorField dph(t, Parity::Odd);
    dph.set_coeff("phi", one);
    m.generators = {D[0], D[1], dl, D[2], D[3], dth, dph};
    m.annihilator = g3system_annihilator();
    m.points["origin"] = {};
    m.default_point = "origin";
    m.expected_growth = {{3, 4}, {1, 2}, {2, 0}};
    return m;
}

Model g3system_rank22_model() {
    auto t = g3system_chart();
    Model m;
    m.name = "g3system-rank22";
    m.chart = t;
    auto D = g3system_totals();
    auto one = SuperPolynomial::constant(t, Rational(1));
    // C = D_x - lambda D_y - theta D_nu - phi D_tau
    SuperVectorField C = D[0] +
                         (-D[1].lmul(SuperPolynomial::variable(t, "lambda"))) +
                         (-D[2].lmul(SuperPolynomial::variable(t, "theta"))) +
                         (-D[3].lmul(SuperPolynomial::variable(t, "phi")));
    SuperVectorField dl(t, Parity::Even);
    dl.set_coeff("lambda", one);
    SuperVectorField dth(t, Parity::Odd);
    dth.set_coeff("theta", one);
    SuperVectorField dph(t, Parity::Odd);
    dph.set_coeff("phi", one);
    m.generators = {C, dl, dth, dph};
    m.points["origin"] = {};
    m.default_point = "origin";
    m.expected_growth = {{2, 2}, {1, 2}, {1, 2}, {1, 0}, {1, 0}};
    return m;
}

Model lift_m12(const FGHKData& d) {
    auto base = d.F.table();
    // extended chart: base coordinates plus the even fibre coordinate lambda
    std::vector<std::tuple<std::string, Parity, int>> vars;
    for (int i = 0; i < base->size(); ++i) {
        const auto& v = base->var(i);
        vars.emplace_back(v.name, v.parity, v.weight);
    }
    vars.emplace_back("lambda", Parity::Even, 1);
    TablePtr t = VariableTable::make(std::move(vars));

    FGHKData dl;
    dl.F = d.F.transport(t);
    dl.G = d.G.transport(t);
    dl.H = d.H.transport(t);
    dl.K = d.K.transport(t);
    Model fm = fghk_model(dl, "lift");
    // fm.generators = {Dx, Duxx, Dnu, Duxnu, Dtau, Duxtau} on the extended chart
    auto lambda = SuperPolynomial::variable(t, "lambda");
    auto one = SuperPolynomial::constant(t, Rational(1));
    SuperVectorField duxx(t, Parity::Even);
    duxx.set_coeff("u_xx", one);
    SuperVectorField duxnu(t, Parity::Odd);
    duxnu.set_coeff("u_xnu", one);
    SuperVectorField duxtau(t, Parity::Odd);
    duxtau.set_coeff("u_xtau", one);
    SuperVectorField dlam(t, Parity::Even);
    dlam.set_coeff("lambda", one);

    SuperPolynomial kschift = fm.generators[0].apply(dl.K) + lambda * dl.K.partial_left("u_xx");
    Model m;
    m.name = "m12-lift";
    m.chart = t;
    m.generators = {fm.generators[0] + duxx.lmul(lambda), dlam,
                    fm.generators[2] + duxnu.lmul(kschift),
                    fm.generators[4] + (-duxtau.lmul(kschift))};
    m.points["origin"] = {};
    m.points["base"] = {{t->require("u_xx"), Rational(1)}};
    m.expected_growth = {{2, 2}, {1, 2}, {1, 2}, {1, 0}, {1, 0}};
    return m;
}

// ---------------------------------------------------------------------------
// Symmetries of the SHC equation: 17 even generators V1..V17 and 14 odd
// generators U1..U14 on C^{5|6}(x,u,u_x,u_xx,z|tau,nu,u_tau,u_nu,u_xtau,u_xnu).
// theta_1..theta_6 = tau, nu, u_tau, u_nu, u_xtau, u_xnu.
// ---------------------------------------------------------------------------
std::vector<SuperVectorField> shc_symmetries() {
    auto t = shc_chart();
    using P = std::vector<std::pair<std::string, std::string>>;
    std::vector<SuperVectorField> F;
    auto even = [&](const P& p) { F.push_back(make_field(t, Parity::Even, p)); };
    auto odd = [&](const P& p) { F.push_back(make_field(t, Parity::Odd, p)); };

    // V1..V17
    even({{"u", "1"}});
    even({{"z", "1"}});
    even({{"u_x", "1"}, {"u", "x"}});
    even({{"x", "1"}});
    even({{"u_xx", "1"},
          {"u", "1/2*x^2 - tau*nu"},
          {"u_x", "x"},
          {"z", "u_x"},
          {"u_tau", "-nu"},
          {"u_nu", "tau"}});
    even({{"x", "x"},
          {"u", "u"},
          {"u_xx", "-u_xx"},
          {"z", "-z"},
          {"tau", "tau"},
          {"nu", "nu"},
          {"u_xtau", "-u_xtau"},
          {"u_xnu", "-u_xnu"}});
    even({{"u", "u"},
          {"u_x", "u_x"},
          {"u_xx", "u_xx"},
          {"z", "2*z"},
          {"u_tau", "u_tau"},
          {"u_nu", "u_nu"},
          {"u_xtau", "u_xtau"},
          {"u_xnu", "u_xnu"}});
    even({{"tau", "tau"},
          {"nu", "-nu"},
          {"u_tau", "-u_tau"},
          {"u_nu", "u_nu"},
          {"u_xtau", "-u_xtau"},
          {"u_xnu", "u_xnu"}});
    even({{"tau", "nu"}, {"u_nu", "-u_tau"}, {"u_xnu", "-u_xtau"}});
    even({{"nu", "tau"}, {"u_tau", "-u_nu"}, {"u_xtau", "-u_xnu"}});
    even({{"x", "u_xx"},
          {"u", "u_x*u_xx - z + u_nu*u_xtau - u_tau*u_xnu"},
          {"u_x", "1/2*u_xx^2 - u_xtau*u_xnu"},
          {"z", "1/6*u_xx^3 - u_xx*u_xtau*u_xnu"},
          {"tau", "u_xnu"},
          {"nu", "-u_xtau"},
          {"u_tau", "u_xx*u_xtau"},
          {"u_nu", "u_xx*u_xnu"}});
    even({{"u", "1/6*x^3 - x*tau*nu"},
          {"u_x", "1/2*x^2 - tau*nu"},
          {"u_xx", "x"},
          {"z", "x*u_x - u + tau*u_tau + nu*u_nu"},
          {"u_tau", "-x*nu"},
          {"u_nu", "x*tau"},
          {"u_xtau", "-nu"},
          {"u_xnu", "tau"}});
    even({{"x", "4*u_x - 3*x*u_xx"},
          {"u", "3*x*(z - u_x*u_xx) + 2*u_x^2 + 3*x*(u_tau*u_xnu - u_nu*u_xtau) - u_tau*u_nu"},
          {"u_x", "3*z - 3/2*x*u_xx^2 + 3*x*u_xtau*u_xnu"},
          {"u_xx", "-(u_xx^2 + 4*u_xtau*u_xnu)"},
          {"z", "-x*u_xx*(1/2*u_xx^2 - 3*u_xtau*u_xnu)"},
          {"tau", "-(3*u_xnu*x - u_nu)"},
          {"nu", "3*u_xtau*x - u_tau"},
          {"u_tau", "-3*x*u_xx*u_xtau"},
          {"u_nu", "-3*x*u_xx*u_xnu"},
          {"u_xtau", "-2*u_xx*u_xtau"},
          {"u_xnu", "-2*u_xx*u_xnu"}});
    even({{"x", "1/2*x^2 + 2*tau*nu"},
          {"u", "3/2*x*u"},
          {"u_x", "1/2*x*u_x + 3/2*u - tau*u_tau - nu*u_nu"},
          {"z", "u_x^2 - 1/2*u_tau*u_nu"},
          {"u_xx", "2*u_x - 1/2*x*u_xx - 2*tau*u_xtau - 2*nu*u_xnu"},
          {"tau", "x*tau"},
          {"nu", "x*nu"},
          {"u_tau", "1/2*x*u_tau - 2*u_x*nu"},
          {"u_nu", "1/2*x*u_nu + 2*u_x*tau"},
          {"u_xtau", "-(u_xx*nu - 1/2*u_tau + 1/2*x*u_xtau)"},
          {"u_xnu", "u_xx*tau + 1/2*u_nu - 1/2*x*u_xnu"}});
    even({{"x",
           "4*x*u_x - 3*u - 3/2*x^2*u_xx + 3*u_xx*tau*nu + tau*u_tau + nu*u_nu"},
          {"u",
           "3/2*x^2*(z - u_x*u_xx) + 2*x*u_x^2 + 3*(u_x*u_xx - z)*tau*nu + "
           "u_x*(tau*u_tau + nu*u_nu) - x*u_tau*u_nu + 3/2*x^2*(u_tau*u_xnu - u_nu*u_xtau) - "
           "3*tau*nu*u_tau*u_xnu + 3*tau*nu*u_nu*u_xtau"},
          {"u_x",
           "3*x*z + u_x^2 - 3/4*x^2*u_xx^2 + 3/2*u_xx^2*tau*nu + u_tau*u_nu + "
           "3/2*x^2*u_xtau*u_xnu - 3*tau*nu*u_xtau*u_xnu"},
          {"u_xx",
           "3*z + u_x*u_xx - x*u_xx^2 - 2*u_xx*(tau*u_xtau + nu*u_xnu) - 4*x*u_xtau*u_xnu + "
           "2*u_tau*u_xnu - 2*u_nu*u_xtau"},
          {"z",
           "3*z*u_x - 1/4*x^2*u_xx^3 + 1/2*u_xx^3*tau*nu + 3/2*x^2*u_xx*u_xtau*u_xnu - "
           "3*u_xx*tau*nu*u_xtau*u_xnu"},
          {"tau", "u_x*tau + x*u_nu - 3/2*x^2*u_xnu + 3*tau*nu*u_xnu"},
          {"nu", "u_x*nu - x*u_tau + 3/2*x^2*u_xtau - 3*tau*nu*u_xtau"},
          {"u_tau", "2*u_x*u_tau - 3*z*nu - 3/2*x^2*u_xx*u_xtau + 3*u_xx*tau*nu*u_xtau"},
          {"u_nu", "3*z*tau + 2*u_x*u_nu - 3/2*x^2*u_xx*u_xnu + 3*u_xx*tau*nu*u_xnu"},
          {"u_xtau",
           "u_xx*u_tau - 1/2*u_xx^2*nu + (u_x - 2*x*u_xx)*u_xtau + 4*nu*u_xtau*u_xnu"},
          {"u_xnu",
           "u_xx*u_nu + 1/2*u_xx^2*tau + (u_x - 2*x*u_xx)*u_xnu - 4*tau*u_xtau*u_xnu"}});
    even({{"x", "2*u_x^2 - 3*u*u_xx - u_tau*u_nu"},
          {"u",
           "4/3*u_x^3 - 3*u*u_x*u_xx + 3*u*z - 2*u_x*u_tau*u_nu + 3*u*(u_tau*u_xnu - "
           "u_nu*u_xtau)"},
          {"u_x", "3*u_x*z - 3/2*u*u_xx^2 + 3*u*u_xtau*u_xnu"},
          {"u_xx",
           "3*u_xx*z - u_x*u_xx^2 + 2*u_xx*(u_tau*u_xnu - u_nu*u_xtau) - 4*u_x*u_xtau*u_xnu"},
          {"z", "3*z^2 - 1/2*u*u_xx^3 + 3*u*u_xx*u_xtau*u_xnu"},
          {"tau", "u_x*u_nu - 3*u*u_xnu"},
          {"nu", "-(u_x*u_tau - 3*u*u_xtau)"},
          {"u_tau", "3*(z*u_tau - u*u_xx*u_xtau)"},
          {"u_xtau",
           "1/2*u_xx^2*u_tau + (3*z - 2*u_x*u_xx)*u_xtau - 4*u_tau*u_xtau*u_xnu"},
          {"u_nu", "3*(z*u_nu - u*u_xx*u_xnu)"},
          {"u_xnu", "1/2*u_xx^2*u_nu + (3*z - 2*u_x*u_xx)*u_xnu - 4*u_nu*u_xtau*u_xnu"}});
    even({{"x",
           "2*x^2*u_x - 1/2*x^3*u_xx - 3*x*u + (3*x*u_xx - 4*u_x)*tau*nu + x*(tau*u_tau + "
           "nu*u_nu)"},
          {"u",
           "1/2*x^3*(z - u_x*u_xx) + x^2*u_x^2 - 3*u^2 + (3*x*(u_x*u_xx - z) - "
           "2*u_x^2)*tau*nu + x*u_x*(tau*u_tau + nu*u_nu) + 1/2*x^3*(u_tau*u_xnu - "
           "u_nu*u_xtau) - 1/2*x^2*u_tau*u_nu + 3*x*(tau*nu*u_nu*u_xtau - "
           "tau*nu*u_tau*u_xnu) + tau*nu*u_tau*u_nu"},
          {"u_x",
           "3/2*x^2*z - 3*u*u_x + x*u_x^2 - 1/4*x^3*u_xx^2 + (3/2*x*u_xx^2 - 3*z)*tau*nu + "
           "2*u_x*(tau*u_tau + nu*u_nu) + x*u_tau*u_nu + 1/2*x^3*u_xtau*u_xnu - "
           "3*x*tau*nu*u_xtau*u_xnu"},
          {"u_xx",
           "3*x*z - 2*u_x^2 + x*u_x*u_xx - 1/2*x^2*u_xx^2 + u_xx^2*tau*nu + "
           "u_xx*(tau*u_tau + nu*u_nu) + 2*(2*u_x - x*u_xx)*(tau*u_xtau + nu*u_xnu) + "
           "u_tau*u_nu + 2*x*(u_tau*u_xnu - u_nu*u_xtau) - 2*x^2*u_xtau*u_xnu + "
           "4*tau*nu*u_xtau*u_xnu"},
          {"z",
           "3*z*(x*u_x - u) - 2/3*u_x^3 - 1/12*x^3*u_xx^3 + 1/2*x*u_xx^3*tau*nu + "
           "3*z*(tau*u_tau + nu*u_nu) + u_x*u_tau*u_nu + 1/2*x^3*u_xx*u_xtau*u_xnu - "
           "3*x*u_xx*tau*nu*u_xtau*u_xnu"},
          {"tau",
           "(x*u_x - 3*u)*tau + 1/2*x^2*u_nu - 1/2*x^3*u_xnu + 3*x*tau*nu*u_xnu - "
           "tau*nu*u_nu"},
          {"nu",
           "(x*u_x - 3*u)*nu - 1/2*x^2*u_tau + 1/2*x^3*u_xtau - 3*x*tau*nu*u_xtau + "
           "tau*nu*u_tau"},
          {"u_tau",
           "(2*u_x^2 - 3*x*z)*nu + (2*x*u_x - 3*u)*u_tau - 1/2*x^3*u_xx*u_xtau + "
           "3*x*u_xx*tau*nu*u_xtau - 4*nu*u_tau*u_nu"},
          {"u_nu",
           "(3*x*z - 2*u_x^2)*tau + (2*x*u_x - 3*u)*u_nu - 1/2*x^3*u_xx*u_xnu + "
           "3*x*u_xx*tau*nu*u_xnu + 4*tau*u_tau*u_nu"},
          {"u_xtau",
           "(2*u_x*u_xx - 1/2*x*u_xx^2 - 3*z)*nu + (x*u_xx - u_x)*(u_tau - x*u_xtau) + "
           "2*u_xx*tau*nu*u_xtau + 4*x*nu*u_xtau*u_xnu - 4*nu*u_tau*u_xnu - "
           "tau*u_tau*u_xtau + 3*nu*u_nu*u_xtau"},
          {"u_xnu",
           "(1/2*x*u_xx^2 - 2*u_x*u_xx + 3*z)*tau + (x*u_xx - u_x)*(u_nu - x*u_xnu) + "
           "2*u_xx*tau*nu*u_xnu - 4*x*tau*u_xtau*u_xnu + 3*tau*u_tau*u_xnu - "
           "4*tau*u_nu*u_xtau - nu*u_nu*u_xnu"}});

    // U1..U14
    odd({{"u_tau", "1"}, {"u", "-tau"}});
    odd({{"u_nu", "1"}, {"u", "-nu"}});
    odd({{"tau", "1"}});
    odd({{"nu", "1"}});
    odd({{"u_xtau", "1"}, {"u_x", "-tau"}, {"u", "-x*tau"}, {"z", "-u_nu"}, {"u_tau", "x"}});
    odd({{"u_xnu", "1"}, {"u_x", "-nu"}, {"u", "-x*nu"}, {"z", "u_tau"}, {"u_nu", "x"}});
    odd({{"x", "2*nu"},
         {"u_x", "-u_tau"},
         {"u_xx", "-2*u_xtau"},
         {"tau", "x"},
         {"u_nu", "2*u_x"},
         {"u_xnu", "u_xx"}});
    odd({{"x", "2*tau"},
         {"u_x", "u_nu"},
         {"u_xx", "2*u_xnu"},
         {"nu", "-x"},
         {"u_tau", "2*u_x"},
         {"u_xtau", "u_xx"}});
    odd({{"x", "2*x*tau"},
         {"u", "3*u*tau"},
         {"u_x", "u_x*tau + x*u_nu"},
         {"u_xx", "u_nu + 2*x*u_xnu - u_xx*tau"},
         {"z", "u_x*u_nu"},
         {"nu", "-(1/2*x^2 - 4*tau*nu)"},
         {"u_tau", "2*x*u_x - 3*u + 3*tau*u_tau + 4*nu*u_nu"},
         {"u_nu", "-tau*u_nu"},
         {"u_xtau", "x*u_xx - u_x + tau*u_xtau + 4*nu*u_xnu"},
         {"u_xnu", "-3*tau*u_xnu"}});
    odd({{"x", "2*x*nu"},
         {"u", "3*u*nu"},
         {"u_x", "u_x*nu - x*u_tau"},
         {"u_xx", "-(u_tau + 2*x*u_xtau + u_xx*nu)"},
         {"z", "-u_x*u_tau"},
         {"tau", "1/2*x^2 - 4*tau*nu"},
         {"u_tau", "-nu*u_tau"},
         {"u_nu", "2*x*u_x - 3*u + 4*tau*u_tau + 3*nu*u_nu"},
         {"u_xtau", "-3*nu*u_xtau"},
         {"u_xnu", "x*u_xx - u_x + 4*tau*u_xtau + nu*u_xnu"}});
    odd({{"x", "3*u_xx*nu + u_tau"},
         {"u", "3*(u_x*u_xx - z)*nu + u_x*u_tau - 3*nu*u_tau*u_xnu + 3*nu*u_nu*u_xtau"},
         {"u_x", "3/2*u_xx^2*nu - 3*nu*u_xtau*u_xnu"},
         {"u_xx", "-2*u_xx*u_xtau"},
         {"z", "u_xx*(1/2*u_xx^2*nu - 3*nu*u_xtau*u_xnu)"},
         {"tau", "u_x + 3*nu*u_xnu"},
         {"nu", "-3*nu*u_xtau"},
         {"u_tau", "3*u_xx*nu*u_xtau"},
         {"u_nu", "3*(z + u_xx*nu*u_xnu)"},
         {"u_xnu", "1/2*u_xx^2 - 4*u_xtau*u_xnu"}});
    odd({{"x", "u_nu - 3*u_xx*tau"},
         {"u", "3*(z - u_x*u_xx)*tau + u_x*u_nu + 3*tau*u_tau*u_xnu - 3*tau*u_nu*u_xtau"},
         {"u_x", "-(3/2*u_xx^2*tau - 3*tau*u_xtau*u_xnu)"},
         {"u_xx", "-2*u_xx*u_xnu"},
         {"z", "-u_xx*(1/2*u_xx^2*tau - 3*tau*u_xtau*u_xnu)"},
         {"tau", "-3*tau*u_xnu"},
         {"nu", "u_x + 3*tau*u_xtau"},
         {"u_tau", "-3*(z + u_xx*tau*u_xtau)"},
         {"u_nu", "-3*u_xx*tau*u_xnu"},
         {"u_xtau", "-(1/2*u_xx^2 - 4*u_xtau*u_xnu)"}});
    odd({{"x", "(3*x*u_xx - 4*u_x)*tau - x*u_nu"},
         {"u",
          "(3*x*(u_x*u_xx - z) - 2*u_x^2)*tau - x*u_x*u_nu + 3*x*(tau*u_nu*u_xtau - "
          "tau*u_tau*u_xnu) + tau*u_tau*u_nu"},
         {"u_x", "3*(1/2*x*u_xx^2 - z)*tau - 2*u_x*u_nu - 3*x*tau*u_xtau*u_xnu"},
         {"u_xx",
          "u_xx^2*tau - u_xx*u_nu + 4*tau*u_xtau*u_xnu + (2*x*u_xx - 4*u_x)*u_xnu"},
         {"z", "1/2*x*u_xx^3*tau - 3*z*u_nu - 3*x*u_xx*tau*u_xtau*u_xnu"},
         {"tau", "3*x*tau*u_xnu - tau*u_nu"},
         {"nu", "3*u - x*u_x + tau*u_tau - 3*x*tau*u_xtau"},
         {"u_tau", "3*x*z - 2*u_x^2 + 4*u_tau*u_nu + 3*x*u_xx*tau*u_xtau"},
         {"u_nu", "3*x*u_xx*tau*u_xnu"},
         {"u_xtau",
          "u_xx*(1/2*x*u_xx - 2*u_x + 2*tau*u_xtau) + 3*z - 3*u_nu*u_xtau + 4*u_tau*u_xnu - "
          "4*x*u_xtau*u_xnu"},
         {"u_xnu", "2*u_xx*tau*u_xnu + u_nu*u_xnu"}});
    odd({{"x", "(4*u_x - 3*x*u_xx)*nu - x*u_tau"},
         {"u",
          "(3*x*z + 2*u_x^2 - 3*x*u_x*u_xx)*nu - x*u_x*u_tau + 3*x*(nu*u_tau*u_xnu - "
          "nu*u_nu*u_xtau) - nu*u_tau*u_nu"},
         {"u_x", "3*(z - 1/2*x*u_xx^2)*nu - 2*u_x*u_tau + 3*x*nu*u_xtau*u_xnu"},
         {"u_xx",
          "-(u_xx^2*nu + u_xx*u_tau + 4*nu*u_xtau*u_xnu + 2*(2*u_x - x*u_xx)*u_xtau)"},
         {"z", "-(3*z*u_tau + x*u_xx*(1/2*u_xx^2*nu - 3*nu*u_xtau*u_xnu))"},
         {"tau", "3*u - x*u_x - 3*x*nu*u_xnu + nu*u_nu"},
         {"nu", "3*x*nu*u_xtau - nu*u_tau"},
         {"u_tau", "-3*x*u_xx*nu*u_xtau"},
         {"u_nu", "-(3*x*z - 2*u_x^2 + 4*u_tau*u_nu + 3*x*u_xx*nu*u_xnu)"},
         {"u_xtau", "u_tau*u_xtau - 2*u_xx*nu*u_xtau"},
         {"u_xnu",
          "-(3*z + u_xx*(1/2*x*u_xx - 2*u_x + 2*nu*u_xnu) - 4*u_nu*u_xtau + 3*u_tau*u_xnu - "
          "4*x*u_xtau*u_xnu)"}});
    return F;
}

std::vector<SuperVectorField> submax_symmetries(int m) {
    if (m < 2) throw std::invalid_argument("submax_symmetries: integer m >= 2 required");
    auto t = m == 2 ? shc_chart() : submax_chart();
    auto var = [&](const char* n) { return SuperPolynomial::variable(t, n); };
    auto cnst = [&](const Rational& c) { return SuperPolynomial::constant(t, c); };
    auto ex = [&](const std::string& s) { return parse_expression(t, s); };
    auto uxxp = [&](int k) { return var("u_xx").pow(k); };
    Rational M(m), M1(m - 1), M2(2 * m - 1);

    std::vector<SuperVectorField> F;
    auto even = [&](std::vector<std::pair<std::string, SuperPolynomial>> cs) {
        SuperVectorField X(t, Parity::Even);
        for (auto& [c, p] : cs) X.set_coeff(c, p);
        if (!X.parity_consistent()) throw std::logic_error("submax even field parity");
        F.push_back(std::move(X));
    };
    auto odd = [&](std::vector<std::pair<std::string, SuperPolynomial>> cs) {
        SuperVectorField X(t, Parity::Odd);
        for (auto& [c, p] : cs) X.set_coeff(c, p);
        if (!X.parity_consistent()) throw std::logic_error("submax odd field parity");
        F.push_back(std::move(X));
    };

    // V1..V10
    even({{"x", ex("1")}});
    even({{"z", ex("1")}});
    even({{"u_x", ex("1")}, {"u", ex("x")}});
    even({{"u", ex("1")}});
    even({{"x", ex("x")},
          {"u", ex("2*u")},
          {"u_x", ex("u_x")},
          {"z", ex("z")},
          {"tau", ex("2*tau")},
          {"u_nu", ex("2*u_nu")},
          {"u_xtau", ex("-u_xtau")},
          {"u_xnu", ex("u_xnu")}});
    even({{"u", ex("u")},
          {"u_x", ex("u_x")},
          {"u_xx", ex("u_xx")},
          {"z", var("z") * M},
          {"tau", ex("tau")},
          {"nu", var("nu") * (-M1)},
          {"u_nu", var("u_nu") * M},
          {"u_xnu", var("u_xnu") * M}});
    even({{"x", uxxp(m - 1)},
          {"u", -(var("z") - var("u_x") * uxxp(m - 1) + ex("u_tau*u_xnu - u_nu*u_xtau"))},
          {"u_x", uxxp(m) * Rational(m - 1, m) - ex("u_xtau*u_xnu")},
          {"z",
           uxxp(m - 1) * (uxxp(m) * Rational(m - 1, static_cast<long long>(m) * (2 * m - 1)) -
                          ex("u_xtau*u_xnu"))},
          {"tau", var("u_xnu")},
          {"nu", -var("u_xtau")},
          {"u_tau", uxxp(m - 1) * var("u_xtau")},
          {"u_nu", uxxp(m - 1) * var("u_xnu")}});
    even({{"tau", ex("tau")},
          {"nu", ex("-nu")},
          {"u_tau", ex("-u_tau")},
          {"u_nu", ex("u_nu")},
          {"u_xtau", ex("-u_xtau")},
          {"u_xnu", ex("u_xnu")}});
    even({{"tau", ex("nu")}, {"u_nu", ex("-u_tau")}, {"u_xnu", ex("-u_xtau")}});
    even({{"nu", ex("tau")}, {"u_tau", ex("-u_nu")}, {"u_xtau", ex("-u_xnu")}});

    // U1..U8
    odd({{"u_tau", ex("1")}, {"u", ex("-tau")}});
    odd({{"u_nu", ex("1")}, {"u", ex("-nu")}});
    odd({{"tau", ex("1")}});
    odd({{"nu", ex("1")}});
    odd({{"u_xtau", ex("1")},
         {"u_tau", ex("x")},
         {"u", ex("-x*tau")},
         {"u_x", ex("-tau")},
         {"z", ex("-u_nu")}});
    odd({{"u_xnu", ex("1")},
         {"u_nu", ex("x")},
         {"u", ex("-x*nu")},
         {"u_x", ex("-nu")},
         {"z", ex("u_tau")}});
    odd({{"x", var("u_nu") - uxxp(m - 1) * var("tau") * M2},
        {"u", var("u_x") * var("u_nu") +
                   ((var("z") - var("u_x") * uxxp(m - 1)) * var("tau") +
                    ex("tau*u_tau*u_xnu - tau*u_nu*u_xtau")) *
                       M2},
         {"u_x", -(uxxp(m) * var("tau") * Rational(m - 1, m) - ex("tau*u_xtau*u_xnu")) * M2},
         {"u_xx", ex("-2*u_xx*u_xnu")},
         {"z", -uxxp(m - 1) * (uxxp(m) * var("tau") * Rational(m - 1, m) -
                               ex("tau*u_xtau*u_xnu") * M2)},
         {"tau", -ex("tau*u_xnu") * M2},
         {"nu", var("u_x") + ex("tau*u_xtau") * M2},
         {"u_xtau", -(uxxp(m) * Rational(m - 1, m) - ex("u_xtau*u_xnu") * Rational(2 * m))},
         {"u_tau", -(var("z") + uxxp(m - 1) * ex("tau*u_xtau")) * M2},
         {"u_nu", -uxxp(m - 1) * ex("tau*u_xnu") * M2}});
    odd({{"x", var("u_tau") + uxxp(m - 1) * var("nu") * M2},
         {"u", var("u_x") * var("u_tau") +
                   ((var("u_x") * uxxp(m - 1) - var("z")) * var("nu") +
                    ex("nu*u_nu*u_xtau - nu*u_tau*u_xnu")) *
                       M2},
         {"u_x", (uxxp(m) * var("nu") * Rational(m - 1, m) - ex("nu*u_xtau*u_xnu")) * M2},
         {"u_xx", ex("-2*u_xx*u_xtau")},
         {"z", uxxp(m - 1) * (uxxp(m) * var("nu") * Rational(m - 1, m) -
                              ex("nu*u_xtau*u_xnu") * M2)},
         {"tau", var("u_x") + ex("nu*u_xnu") * M2},
         {"nu", -ex("nu*u_xtau") * M2},
         {"u_xnu", uxxp(m) * Rational(m - 1, m) - ex("u_xtau*u_xnu") * Rational(2 * m)},
         {"u_tau", uxxp(m - 1) * ex("nu*u_xtau") * M2},
         {"u_nu", (var("z") + uxxp(m - 1) * ex("nu*u_xnu")) * M2}});
    (void)cnst;
    return F;
}

TablePtr j1_chart() {
    static TablePtr t = VariableTable::make({{"x", Parity::Even, 1},
                                             {"y", Parity::Even, 1},
                                             {"nu", Parity::Odd, 1},
                                             {"tau", Parity::Odd, 1},
                                             {"u", Parity::Even, 2},
                                             {"u_x", Parity::Even, 1},
                                             {"u_y", Parity::Even, 1},
                                             {"u_nu", Parity::Odd, 1},
                                             {"u_tau", Parity::Odd, 1}});
    return t;
}

const std::vector<NamedFunction>& g3_contact_functions() {
    static const std::vector<NamedFunction> f = {
        {"g2",
         "u*(u - x*u_x - y*u_y - nu*u_nu - tau*u_tau) - 1/2*(1/3*y^3 + 2*y*nu*tau)*u_x + "
         "1/2*(4/9*u_y^3 + 2/3*u_y*u_nu*u_tau)*x + 1/4*(y^2 + 2*nu*tau)*(4/3*u_y^2 + "
         "2/3*u_nu*u_tau) + 1/3*y*tau*u_y*u_tau + 1/3*y*nu*u_y*u_nu",
         4, Parity::Even},
        {"g1_x", "x*(u - x*u_x - y*u_y - nu*u_nu - tau*u_tau) - 1/6*y^3 - y*nu*tau", 3,
         Parity::Even},
        {"g1_y",
         "y*(u - x*u_x - 1/3*y*u_y - 2/3*nu*u_nu - 2/3*tau*u_tau) + 2/3*x*u_y^2 + "
         "1/3*x*u_nu*u_tau + 4/3*nu*tau*u_y",
         3, Parity::Even},
        {"g1_nu",
         "nu*(u - x*u_x - 2/3*y*u_y - 4/3*tau*u_tau) - 1/3*x*u_y*u_tau - 1/6*y^2*u_tau", 3,
         Parity::Odd},
        {"g1_tau",
         "tau*(u - x*u_x - 2/3*y*u_y - 4/3*nu*u_nu) + 1/3*u_y*u_nu*x + 1/6*y^2*u_nu", 3,
         Parity::Odd},
        {"g1_ux", "u*u_x - 2/9*u_y^3 - 1/3*u_y*u_nu*u_tau", 3, Parity::Even},
        {"g1_uy",
         "u*u_y + 1/2*y^2*u_x + nu*tau*u_x - 2/3*y*u_y^2 - 1/3*y*u_nu*u_tau - "
         "1/3*nu*u_y*u_nu - 1/3*tau*u_y*u_tau",
         3, Parity::Even},
        {"g1_unu",
         "u*u_nu + y*tau*u_x - 2/3*tau*u_y^2 - 1/3*tau*u_nu*u_tau - 1/3*y*u_y*u_nu", 3,
         Parity::Odd},
        {"g1_utau",
         "u*u_tau - y*nu*u_x + 2/3*nu*u_y^2 + 1/3*nu*u_nu*u_tau - 1/3*y*u_y*u_tau", 3,
         Parity::Odd},
        {"Z", "2*u - x*u_x - y*u_y - nu*u_nu - tau*u_tau", 2, Parity::Even},
        {"f1_y", "y*u_x - 2/3*u_y^2 - 1/3*u_nu*u_tau", 2, Parity::Even},
        {"f1_nu", "nu*u_x + 1/3*u_y*u_tau", 2, Parity::Odd},
        {"f1_tau", "tau*u_x - 1/3*u_y*u_nu", 2, Parity::Odd},
        {"Z0", "3/2*x*u_x + 1/2*(y*u_y + nu*u_nu + tau*u_tau)", 2, Parity::Even},
        {"f0_h2", "nu*u_nu - tau*u_tau", 2, Parity::Even},
        {"f0_x2", "nu*u_tau", 2, Parity::Even},
        {"f0_y2", "tau*u_nu", 2, Parity::Even},
        {"f0_a", "y*u_nu - 2*tau*u_y", 2, Parity::Odd},
        {"f0_b", "y*u_tau + 2*nu*u_y", 2, Parity::Odd},
        {"fm1_y", "x*u_y + 1/2*y^2 + nu*tau", 2, Parity::Even},
        {"fm1_nu", "x*u_nu + y*tau", 2, Parity::Odd},
        {"fm1_tau", "x*u_tau - y*nu", 2, Parity::Odd},
        {"gm1_x", "x", 1, Parity::Even},
        {"gm1_y", "y", 1, Parity::Even},
        {"gm1_nu", "nu", 1, Parity::Odd},
        {"gm1_tau", "tau", 1, Parity::Odd},
        {"gm1_ux", "u_x", 1, Parity::Even},
        {"gm1_uy", "u_y", 1, Parity::Even},
        {"gm1_unu", "u_nu", 1, Parity::Odd},
        {"gm1_utau", "u_tau", 1, Parity::Odd},
        {"gm2", "1", 0, Parity::Even},
    };
    return f;
}

GradedLSA symbol_model(const std::string& which) {
    // basis order: e1 e2 | h | f1 f2 | t1' t1'' t2' t2'' | r1 r2
    std::vector<GradedLSA::BasisElement> basis = {
        {"e1", Parity::Even, -1},  {"e2", Parity::Even, -1}, {"h", Parity::Even, -2},
        {"f1", Parity::Even, -3},  {"f2", Parity::Even, -3}, {"t1p", Parity::Odd, -1},
        {"t1pp", Parity::Odd, -1}, {"t2p", Parity::Odd, -1}, {"t2pp", Parity::Odd, -1},
        {"r1", Parity::Odd, -2},   {"r2", Parity::Odd, -2}};
    const int e1 = 0, e2 = 1, h = 2, f1 = 3, f2 = 4, t1p = 5, t1pp = 6, t2p = 7, t2pp = 8,
              r1 = 9, r2 = 10;
    GradedLSA L(basis);
    auto set = [&](int i, int j, int k, long long c) {
        if (i <= j)
            L.set_bracket(i, j, {{k, Rational(c)}});
        else
            throw std::logic_error("symbol_model: order");
    };
    bool omega = which != "M4";
    bool q = which != "M3";
    bool theta = which != "M3";
    bool m2 = which == "M2";
    if (which != "M1" && which != "M2" && which != "M3" && which != "M4")
        throw std::invalid_argument("symbol_model: expected M1..M4");

    if (omega) set(e1, e2, h, 1);
    set(e1, h, f1, 1);
    if (!m2) set(e2, h, f2, 1);
    if (q) {
        set(t1p, t2p, h, 1);
        set(t1pp, t2pp, h, 1);
    }
    if (m2) {
        // Xi: e1 pairs with K_{e1}-complement t1', t1''
        set(e1, t1p, r1, 1);
        set(e1, t1pp, r2, 1);
        // Theta per the (M2) table
        set(t1p, r2, f2, 1);
        set(t1pp, r1, f2, -1);
        set(t2p, r1, f1, 1);
        set(t2pp, r2, f1, 1);
    } else if (which == "M3") {
        set(e1, t1p, r1, 1);
        set(e1, t1pp, r2, 1);
        set(e2, t2p, r1, 1);
        set(e2, t2pp, r2, 1);
    } else {
        // SHC brackets (also M4)
        set(e1, t2p, r1, 1);
        set(e1, t2pp, r2, 1);
        set(e2, t1p, r2, -1);
        set(e2, t1pp, r1, 1);
        set(t1p, r1, f1, 1);
        set(t1pp, r2, f1, 1);
        set(t2p, r2, f2, -1);
        set(t2pp, r1, f2, 1);
    }
    if (theta && which == "M2") {
        // already set above
    }
    std::string w;
    if (!L.check_jacobi(&w)) throw std::logic_error("symbol_model " + which + ": " + w);
    return L;
}

GradedLSA contact_symbol() {
    // b0..b3, b^0..b^3 in degree -1 (parities e,e,o,o,e,e,o,o) and a central c.
    std::vector<GradedLSA::BasisElement> basis = {
        {"b0", Parity::Even, -1}, {"b1", Parity::Even, -1}, {"b2", Parity::Odd, -1},
        {"b3", Parity::Odd, -1},  {"B0", Parity::Even, -1}, {"B1", Parity::Even, -1},
        {"B2", Parity::Odd, -1},  {"B3", Parity::Odd, -1},  {"c", Parity::Even, -2}};
    GradedLSA L(basis);
    // [b_i, b^i] = c  (eta(b_i, b^j) = delta)
    for (int i = 0; i < 4; ++i) L.set_bracket(i, 4 + i, {{8, Rational(1)}});
    std::string w;
    if (!L.check_jacobi(&w)) throw std::logic_error("contact_symbol: " + w);
    return L;
}

Model model_by_name(const std::string& name) {
    if (name == "shc" || name == "fghk-template") return shc_model();
    if (name == "hc-classical") return hc_classical_model();
    if (name == "g3contact" || name == "g3contact-system") return g3system_model();
    if (name == "g3system-rank22") return g3system_rank22_model();
    if (name == "flat-contact-22") return flat_contact22_model();
    if (name.rfind("submax-m", 0) == 0) {
        int m = std::stoi(name.substr(8));
        return submax_model(m);
    }
    throw std::invalid_argument("unknown model name: " + name);
}

}  // namespace sg::models
