#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supergeom/bigint.hpp"
#include "supergeom/parser.hpp"
#include "supergeom/rational.hpp"
#include "supergeom/superpoly.hpp"
#include "test_util.hpp"

using namespace sg;

TEST_CASE("bigint arithmetic matches long long on small values") {
    sgt::Rng rng(1);
    for (int k = 0; k < 2000; ++k) {
        long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_longlong() == a + b);
        CHECK((A - B).to_longlong() == a - b);
        CHECK((A * B).to_longlong() == a * b);
        if (b != 0) {
            CHECK((A / B).to_longlong() == a / b);
            CHECK((A % B).to_longlong() == a % b);
        }
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    sgt::Rng rng(2);
    BigInt big(1);
    for (int i = 2; i <= 40; ++i) big = big * BigInt(i);  // 40!
    for (int k = 0; k < 200; ++k) {
        BigInt a = big * BigInt(static_cast<long long>(rng.next() % 1000000) - 500000) +
                   BigInt(static_cast<long long>(rng.next() % 99991));
        BigInt b = BigInt(static_cast<long long>(rng.next() % 99989) + 1) *
                   BigInt(static_cast<long long>(rng.next() % 1000) + 1);
        if (rng.next() & 1) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        // |r| < |b|
        BigInt ra = r.is_negative() ? -r : r;
        BigInt ba = b.is_negative() ? -b : b;
        CHECK(ra < ba);
    }
}

TEST_CASE("bigint decimal round trip") {
    BigInt f(1);
    for (int i = 2; i <= 52; ++i) f = f * BigInt(i);
    std::string s = f.to_string();
    CHECK(BigInt::from_string(s) == f);
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
}

TEST_CASE("rational normalization and field ops") {
    Rational a(6, -4);
    CHECK(a.to_string() == "-3/2");
    Rational b(1, 3);
    CHECK((a + b).to_string() == "-7/6");
    CHECK((a * b).to_string() == "-1/2");
    CHECK((a / a).is_one());
    CHECK(Rational::from_string("9/4").to_string() == "9/4");
    CHECK_THROWS(Rational(1, 0));
}

static TablePtr grassmann_table() {
    return VariableTable::make({{"lambda", Parity::Even, 1},
                                {"x", Parity::Even, 1},
                                {"theta", Parity::Odd, 1},
                                {"phi", Parity::Odd, 1}});
}

TEST_CASE("odd squares vanish and odd variables anticommute") {
    auto t = grassmann_table();
    auto th = SuperPolynomial::variable(t, "theta");
    auto ph = SuperPolynomial::variable(t, "phi");
    CHECK((th * th).is_zero());
    CHECK(th * ph == -(ph * th));
}

TEST_CASE("square of lambda^2/2 + theta*phi") {
    auto t = grassmann_table();
    auto p = parse_expression(t, "1/2*lambda^2 + theta*phi");
    auto q = p * p;
    CHECK(q == parse_expression(t, "1/4*lambda^4 + lambda^2*theta*phi"));
}

TEST_CASE("left odd derivative") {
    auto t = grassmann_table();
    auto th = SuperPolynomial::variable(t, "theta");
    auto ph = SuperPolynomial::variable(t, "phi");
    auto m = th * ph;
    CHECK(m.partial_left("theta") == ph);
    CHECK(m.partial_left("phi") == -th);
    auto p = parse_expression(t, "1/3*lambda^3 + 2*lambda*theta*phi");
    CHECK(p.partial_left("lambda") == parse_expression(t, "lambda^2 + 2*theta*phi"));
}

TEST_CASE("odd partials anticommute, square to zero") {
    auto t = grassmann_table();
    sgt::Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        auto p = sgt::random_poly(t, rng, 6, 4);
        auto ab = p.partial_left("theta").partial_left("phi");
        auto ba = p.partial_left("phi").partial_left("theta");
        CHECK(ab == -ba);
        CHECK(p.partial_left("theta").partial_left("theta").is_zero());
    }
}

TEST_CASE("supercommutativity on parity-homogeneous inputs") {
    auto t = grassmann_table();
    sgt::Rng rng(4);
    for (int k = 0; k < 60; ++k) {
        Parity pa = (rng.next() & 1) ? Parity::Odd : Parity::Even;
        Parity pb = (rng.next() & 1) ? Parity::Odd : Parity::Even;
        auto a = sgt::random_poly(t, rng, 4, 3, pa);
        auto b = sgt::random_poly(t, rng, 4, 3, pb);
        auto ab = a * b;
        auto ba = b * a;
        if (pa == Parity::Odd && pb == Parity::Odd)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
    }
}

TEST_CASE("super-Leibniz for left odd derivatives") {
    auto t = grassmann_table();
    sgt::Rng rng(5);
    for (int k = 0; k < 60; ++k) {
        Parity pa = (rng.next() & 1) ? Parity::Odd : Parity::Even;
        auto a = sgt::random_poly(t, rng, 4, 3, pa);
        auto b = sgt::random_poly(t, rng, 4, 3);
        auto lhs = (a * b).partial_left("theta");
        auto rhs = a.partial_left("theta") * b;
        auto t2 = a * b.partial_left("theta");
        if (pa == Parity::Odd)
            rhs -= t2;
        else
            rhs += t2;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("substitution is a parity-checked ring homomorphism") {
    auto t = VariableTable::make({{"u_nt", Parity::Even, 1},
                                  {"u_yy", Parity::Even, 1},
                                  {"lambda", Parity::Even, 1},
                                  {"theta", Parity::Odd, 1},
                                  {"phi", Parity::Odd, 1}});
    auto p = parse_expression(t, "u_nt + u_yy");
    std::map<int, SuperPolynomial> b;
    b[t->require("u_nt")] = parse_expression(t, "-lambda");
    b[t->require("u_yy")] = parse_expression(t, "lambda");
    CHECK(p.substitute(b).is_zero());

    // identity binding leaves the polynomial unchanged
    std::map<int, SuperPolynomial> id;
    id[t->require("lambda")] = SuperPolynomial::variable(t, "lambda");
    auto q = parse_expression(t, "lambda^2*theta + 3*u_yy");
    CHECK(q.substitute(id) == q);

    // parity mismatch
    std::map<int, SuperPolynomial> bad;
    bad[t->require("theta")] = SuperPolynomial::variable(t, "lambda");
    CHECK_THROWS(q.substitute(bad));

    // homomorphism on random inputs
    sgt::Rng rng(6);
    for (int k = 0; k < 40; ++k) {
        auto f = sgt::random_poly(t, rng, 4, 3);
        auto g = sgt::random_poly(t, rng, 4, 3);
        std::map<int, SuperPolynomial> s;
        s[t->require("u_nt")] = sgt::random_poly(t, rng, 3, 2, Parity::Even);
        s[t->require("theta")] = sgt::random_poly(t, rng, 2, 2, Parity::Odd);
        CHECK((f * g).substitute(s) == f.substitute(s) * g.substitute(s));
        CHECK((f + g).substitute(s) == f.substitute(s) + g.substitute(s));
    }
}

TEST_CASE("weighted degree split") {
    auto t = VariableTable::make({{"x", Parity::Even, 1},
                                  {"y", Parity::Even, 1},
                                  {"u", Parity::Even, 2},
                                  {"u_x", Parity::Even, 1},
                                  {"u_y", Parity::Even, 1},
                                  {"nu", Parity::Odd, 1},
                                  {"tau", Parity::Odd, 1},
                                  {"u_nu", Parity::Odd, 1},
                                  {"u_tau", Parity::Odd, 1}});
    auto p = parse_expression(t, "x*u_x");
    auto parts = p.weighted_split();
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == 2);

    auto q = parse_expression(t, "1 + x");
    auto qp = q.weighted_split();
    REQUIRE(qp.size() == 2);
    CHECK(qp[0].first == 0);
    CHECK(qp[1].first == 1);
    CHECK(qp[0].second == parse_expression(t, "1"));
    CHECK(qp[1].second == parse_expression(t, "x"));

    auto z = parse_expression(t, "2*u - x*u_x - y*u_y - nu*u_nu - tau*u_tau");
    CHECK(z.weighted_homogeneous(2));
}

TEST_CASE("canonical form is construction-order independent") {
    auto t = grassmann_table();
    sgt::Rng rng(7);
    for (int k = 0; k < 30; ++k) {
        auto a = sgt::random_poly(t, rng, 5, 3);
        auto b = sgt::random_poly(t, rng, 5, 3);
        auto c = sgt::random_poly(t, rng, 5, 3);
        CHECK((a + b) + c == (c + a) + b);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("parser reports position-tagged errors") {
    auto t = grassmann_table();
    CHECK_THROWS_AS(parse_expression(t, "lambda + unknown"), ParseError);
    try {
        parse_expression(t, "lambda + qq");
    } catch (const ParseError& e) {
        CHECK(e.position == 9);
    }
    CHECK_THROWS_AS(parse_expression(t, "theta^2"), ParseError);
    CHECK(parse_expression(t, "theta^1") == SuperPolynomial::variable(t, "theta"));
    CHECK(parse_expression(t, "(theta + phi)^0") ==
          SuperPolynomial::constant(t, Rational(1)));
    CHECK_THROWS_AS(parse_expression(t, "lambda + "), ParseError);
    CHECK_THROWS_AS(parse_expression(t, "lambda lambda"), ParseError);
    CHECK(parse_expression(t, "3/4*lambda - lambda") ==
          SuperPolynomial::variable(t, "lambda") * Rational(-1, 4));
}

TEST_CASE("classical evaluation kills odd terms") {
    auto t = grassmann_table();
    auto p = parse_expression(t, "2*lambda^2 + 5*theta*phi + 7");
    std::map<int, Rational> pt;
    pt[t->require("lambda")] = Rational(3);
    CHECK(p.eval_classical(pt) == Rational(25));
}

TEST_CASE("operations across different tables are rejected") {
    auto t1 = VariableTable::make({{"x", Parity::Even, 1}});
    auto t2 = VariableTable::make({{"x", Parity::Even, 1}});
    auto a = SuperPolynomial::variable(t1, "x");
    auto b = SuperPolynomial::variable(t2, "x");
    CHECK_THROWS(a * b);
    CHECK_THROWS(a + b);
}
