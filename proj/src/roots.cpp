#include "supergeom/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace sg {

int pairing(const Root& x, const Root& y) {
    // <delta,delta> = 2, <eps_i,eps_j> = 1 - 3 delta_ij with eps3 eliminated
    return 2 * x.a * y.a - 2 * x.c1 * y.c1 - 2 * x.c2 * y.c2 + x.c1 * y.c2 + x.c2 * y.c1;
}

RootDatumG3::RootDatumG3() {
    const Root d2{2, 0, 0};
    const Root e1{0, 1, 0}, e2{0, 0, 1}, e3{0, -1, -1};
    auto push_pm = [](std::vector<Root>& v, const Root& r) {
        v.push_back(r);
        v.push_back(-r);
    };
    push_pm(even_, d2);
    push_pm(even_, e1);
    push_pm(even_, e2);
    push_pm(even_, e3);
    push_pm(even_, Root{0, 1, -1});  // e1 - e2
    push_pm(even_, Root{0, 2, 1});   // e1 - e3
    push_pm(even_, Root{0, 1, 2});   // e2 - e3
    const Root d{1, 0, 0};
    push_pm(odd_, d);
    push_pm(odd_, d + e1);
    push_pm(odd_, d + e2);
    push_pm(odd_, d + e3);
    push_pm(odd_, d + (-e1));
    push_pm(odd_, d + (-e2));
    push_pm(odd_, d + (-e3));

    systems_ = {
        {"I",
         {Root{1, -1, -1}, e1, Root{0, -1, 1}},
         {Parity::Odd, Parity::Even, Parity::Even}},
        {"II",
         {Root{-1, 1, 1}, Root{1, 0, -1}, Root{0, -1, 1}},
         {Parity::Odd, Parity::Odd, Parity::Even}},
        {"III",
         {Root{-1, 0, 1}, Root{1, -1, 0}, e1},
         {Parity::Odd, Parity::Odd, Parity::Even}},
        {"IV",
         {Root{0, -1, 1}, Root{-1, 1, 0}, d},
         {Parity::Even, Parity::Odd, Parity::Odd}},
    };
}

const SimpleSystem& RootDatumG3::system(const std::string& name) const {
    for (const auto& s : systems_)
        if (s.name == name) return s;
    throw std::invalid_argument("unknown simple system " + name);
}

const std::vector<std::string>& RootDatumG3::system_names() {
    static const std::vector<std::string> n = {"I", "II", "III", "IV"};
    return n;
}

bool RootDatumG3::is_root(const Root& r, Parity* parity) const {
    if (std::find(even_.begin(), even_.end(), r) != even_.end()) {
        if (parity) *parity = Parity::Even;
        return true;
    }
    if (std::find(odd_.begin(), odd_.end(), r) != odd_.end()) {
        if (parity) *parity = Parity::Odd;
        return true;
    }
    return false;
}

std::array<Rational, 3> RootDatumG3::coefficients(const SimpleSystem& s, const Root& r) const {
    Rational m[3][4];
    const Root* a[3] = {&s.alpha[0], &s.alpha[1], &s.alpha[2]};
    int rows[3][4] = {{a[0]->a, a[1]->a, a[2]->a, r.a},
                      {a[0]->c1, a[1]->c1, a[2]->c1, r.c1},
                      {a[0]->c2, a[1]->c2, a[2]->c2, r.c2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(rows[i][j]);
    for (int c = 0; c < 3; ++c) {
        int p = -1;
        for (int i = c; i < 3; ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw std::logic_error("coefficients: singular simple system");
        if (p != c)
            for (int j = 0; j < 4; ++j) std::swap(m[p][j], m[c][j]);
        for (int i = 0; i < 3; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[c][c];
            for (int j = c; j < 4; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

std::vector<Root> RootDatumG3::positive_roots(const SimpleSystem& s, Parity p) const {
    std::vector<Root> out;
    const auto& all = p == Parity::Even ? even_ : odd_;
    for (const auto& r : all) {
        auto c = coefficients(s, r);
        bool nonneg = true, pos = false;
        for (const auto& x : c) {
            if (x.sign() < 0) nonneg = false;
            if (x.sign() > 0) pos = true;
            if (!x.is_integer()) nonneg = false;
        }
        if (nonneg && pos) out.push_back(r);
    }
    return out;
}

Root RootDatumG3::even_reflect(const Root& alpha, const Root& beta) const {
    int aa = pairing(alpha, alpha);
    if (aa == 0) throw std::invalid_argument("even_reflect: isotropic root");
    int ab = pairing(beta, alpha);
    if ((2 * ab) % aa != 0) throw std::logic_error("even_reflect: non-integral reflection");
    int k = 2 * ab / aa;
    return {beta.a - k * alpha.a, beta.c1 - k * alpha.c1, beta.c2 - k * alpha.c2};
}

SimpleSystem RootDatumG3::odd_reflect(const SimpleSystem& s, int i, std::string* matched) const {
    const Root& alpha = s.alpha[i];
    if (s.parity[i] != Parity::Odd || pairing(alpha, alpha) != 0)
        throw std::invalid_argument("odd_reflect: root is not odd isotropic");
    SimpleSystem r = s;
    r.name = s.name + "'";
    for (int j = 0; j < 3; ++j) {
        const Root& beta = s.alpha[j];
        if (j == i) {
            r.alpha[j] = -alpha;
        } else if (pairing(alpha, beta) != 0) {
            r.alpha[j] = beta + alpha;
        } else {
            r.alpha[j] = beta;
        }
        Parity p;
        if (!is_root(r.alpha[j], &p)) throw std::logic_error("odd_reflect: image is not a root");
        r.parity[j] = p;
    }
    std::string name = match_system(r.alpha);
    if (matched) *matched = name;
    return r;
}

std::string RootDatumG3::match_system(const std::array<Root, 3>& alpha) const {
    std::array<Root, 3> sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& s : systems_) {
        std::array<Root, 3> t = s.alpha;
        std::sort(t.begin(), t.end());
        if (t == sorted) return s.name;
    }
    return "";
}

std::vector<std::pair<int, int>> RootDatumG3::parabolic_growth(const SimpleSystem& s,
                                                               const std::vector<int>& A) const {
    if (A.empty()) throw std::invalid_argument("parabolic_growth: empty marking");
    std::map<int, std::pair<int, int>> neg;
    auto handle = [&](const Root& r, Parity p) {
        auto c = coefficients(s, r);
        Rational deg(0);
        for (int i : A) deg += c[i - 1];
        if (!deg.is_integer()) throw std::logic_error("parabolic_growth: non-integral degree");
        long long d = deg.num().to_longlong();
        if (d >= 0) return;
        auto& slot = neg[static_cast<int>(-d)];
        if (p == Parity::Even)
            ++slot.first;
        else
            ++slot.second;
    };
    for (const auto& r : even_) handle(r, Parity::Even);
    for (const auto& r : odd_) handle(r, Parity::Odd);
    std::vector<std::pair<int, int>> out;
    int depth = neg.empty() ? 0 : neg.rbegin()->first;
    for (int k = 1; k <= depth; ++k) {
        auto it = neg.find(k);
        out.push_back(it == neg.end() ? std::pair<int, int>{0, 0} : it->second);
    }
    return out;
}

std::pair<int, int> RootDatumG3::parabolic_dim0(const SimpleSystem& s,
                                                const std::vector<int>& A) const {
    std::pair<int, int> dim0{3, 0};  // Cartan subalgebra
    auto handle = [&](const Root& r, Parity p) {
        auto c = coefficients(s, r);
        Rational deg(0);
        for (int i : A) deg += c[i - 1];
        if (deg.is_zero()) {
            if (p == Parity::Even)
                ++dim0.first;
            else
                ++dim0.second;
        }
    };
    for (const auto& r : even_) handle(r, Parity::Even);
    for (const auto& r : odd_) handle(r, Parity::Odd);
    return dim0;
}

const std::vector<FlagRow>& flag_atlas() {
    static const std::vector<FlagRow> rows = {
        {"I", {1}, "P1^I", {{0, 7}, {1, 0}}},
        {"I", {3}, "P3^I=P3^II=P2^III", {{4, 3}, {2, 2}}},
        {"IV", {1}, "P1^III=P1^IV", {{4, 4}, {1, 0}}},
        {"IV", {3}, "P1^II=P3^III=P3^IV", {{2, 2}, {2, 2}, {2, 1}}},
        {"IV", {2}, "P2^IV", {{2, 4}, {1, 2}, {2, 0}}},
        {"I", {2}, "P2^I=P2^II", {{2, 2}, {1, 1}, {2, 2}, {1, 1}}},
        {"I", {1, 3}, "P13^I", {{4, 2}, {1, 3}, {0, 2}, {1, 0}}},
        {"III", {1, 2}, "P12^III", {{0, 5}, {5, 0}, {0, 2}, {1, 0}}},
        {"II", {1, 3}, "P13^II=P23^III", {{2, 2}, {1, 1}, {1, 1}, {2, 1}, {1, 1}}},
        {"IV", {1, 3}, "P13^III=P13^IV", {{2, 2}, {2, 2}, {1, 1}, {1, 1}, {1, 0}}},
        {"IV", {1, 2}, "P12^IV", {{2, 2}, {1, 2}, {1, 2}, {1, 0}, {1, 0}}},
        {"I", {1, 2}, "P12^I", {{2, 1}, {1, 2}, {2, 1}, {0, 2}, {0, 1}, {1, 0}}},
        {"I", {2, 3}, "P23^I=P23^II", {{2, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}},
        {"IV", {2, 3}, "P23^IV", {{0, 3}, {3, 0}, {0, 3}, {1, 0}, {0, 1}, {2, 0}}},
        {"II", {1, 2}, "P12^II", {{0, 3}, {2, 0}, {0, 1}, {1, 0}, {0, 2}, {3, 0}, {0, 1}}},
        {"III",
         {1, 2, 3},
         "P123^III",
         {{1, 2}, {1, 2}, {1, 1}, {2, 0}, {1, 1}, {0, 1}, {1, 0}}},
        {"I",
         {1, 2, 3},
         "P123^I",
         {{2, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {0, 1}, {0, 1}, {1, 0}}},
        {"IV",
         {1, 2, 3},
         "P123^IV",
         {{1, 2}, {2, 1}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {1, 0}, {1, 0}}},
        {"II",
         {1, 2, 3},
         "P123^II",
         {{1, 2}, {1, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 1}}},
    };
    return rows;
}

}  // namespace sg
