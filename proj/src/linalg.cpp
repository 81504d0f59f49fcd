#include "supergeom/linalg.hpp"

#include <algorithm>

namespace sg {

void SVec::add(int64_t i, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(e.begin(), e.end(), i,
                               [](const auto& p, int64_t k) { return p.first < k; });
    if (it != e.end() && it->first == i) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    } else {
        e.insert(it, {i, c});
    }
}

void SVec::axpy(const Rational& c, const SVec& o) {
    if (c.is_zero() || o.e.empty()) return;
    std::vector<std::pair<int64_t, Rational>> out;
    out.reserve(e.size() + o.e.size());
    size_t i = 0, j = 0;
    while (i < e.size() || j < o.e.size()) {
        if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
            out.push_back(e[i++]);
        } else if (i == e.size() || o.e[j].first < e[i].first) {
            out.emplace_back(o.e[j].first, c * o.e[j].second);
            if (out.back().second.is_zero()) out.pop_back();
            ++j;
        } else {
            Rational v = e[i].second + c * o.e[j].second;
            if (!v.is_zero()) out.emplace_back(e[i].first, v);
            ++i;
            ++j;
        }
    }
    e = std::move(out);
}

void SVec::scale(const Rational& c) {
    if (c.is_zero()) {
        e.clear();
        return;
    }
    for (auto& [i, v] : e) v *= c;
}

void SVec::normalize_content() {
    if (e.empty()) return;
    BigInt g(0), l(1);
    for (const auto& [i, v] : e) {
        g = BigInt::gcd(g, v.num());
        l = l / BigInt::gcd(l, v.den()) * v.den();
    }
    Rational f(l, g);
    if (!f.is_one()) scale(f);
    if (e.front().second.sign() < 0) scale(Rational(-1));
}

void LinearSpan::reduce(SVec& v, std::vector<Rational>* combo) const {
    while (!v.is_zero()) {
        auto it = lead_to_row_.find(v.lead());
        if (it == lead_to_row_.end()) break;
        int j = it->second;
        Rational f = v.lead_coeff() / rows_[j].lead_coeff();
        v.axpy(-f, rows_[j]);
        if (combo) {
            for (size_t i = 0; i < combos_[j].size(); ++i)
                if (!combos_[j][i].is_zero()) {
                    if (combo->size() <= i) combo->resize(i + 1, Rational(0));
                    (*combo)[i] += f * combos_[j][i];
                }
        }
    }
}

bool LinearSpan::insert(const SVec& v) {
    SVec w = v;
    std::vector<Rational> combo;
    reduce(w, &combo);
    int my_index = n_inserted_++;
    if (w.is_zero()) return false;
    // w = v - sum combo_i inserted_i  => store row combo with +1 on my_index
    std::vector<Rational> c(my_index + 1, Rational(0));
    for (size_t i = 0; i < combo.size(); ++i) c[i] = -combo[i];
    c[my_index] = Rational(1);
    // normalize row magnitude (and rescale combo identically)
    SVec before = w;
    w.normalize_content();
    if (!before.is_zero()) {
        // recover the applied factor from the lead entries
        Rational f = w.lead_coeff() / before.lead_coeff();
        for (auto& x : c) x *= f;
    }
    lead_to_row_[w.lead()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(w));
    combos_.push_back(std::move(c));
    return true;
}

bool LinearSpan::contains(const SVec& v) const {
    SVec w = v;
    reduce(w, nullptr);
    return w.is_zero();
}

std::optional<std::vector<Rational>> LinearSpan::express(const SVec& v) const {
    SVec w = v;
    std::vector<Rational> combo;
    reduce(w, &combo);
    if (!w.is_zero()) return std::nullopt;
    combo.resize(n_inserted_, Rational(0));
    return combo;
}

void EqSystem::add_equation(SVec eq) {
    while (!eq.is_zero()) {
        auto it = lead_to_row_.find(eq.lead());
        if (it == lead_to_row_.end()) break;
        const SVec& r = rows_[it->second];
        Rational f = eq.lead_coeff() / r.lead_coeff();
        eq.axpy(-f, r);
    }
    if (eq.is_zero()) return;
    eq.normalize_content();
    lead_to_row_[eq.lead()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(eq));
}

std::vector<std::vector<Rational>> EqSystem::kernel_basis() const {
    // Back-reduce a copy of the echelon rows to RREF.
    std::vector<SVec> rref = rows_;
    std::sort(rref.begin(), rref.end(),
              [](const SVec& a, const SVec& b) { return a.lead() < b.lead(); });
    std::unordered_map<int64_t, int> pivot_row;
    for (size_t j = 0; j < rref.size(); ++j) pivot_row[rref[j].lead()] = static_cast<int>(j);
    for (size_t j = rref.size(); j-- > 0;) {
        // normalize lead to 1
        Rational inv = rref[j].lead_coeff().inverse();
        rref[j].scale(inv);
        // eliminate this pivot from earlier rows
        int64_t p = rref[j].lead();
        for (size_t i = 0; i < j; ++i) {
            const auto& ents = rref[i].e;
            auto it = std::lower_bound(ents.begin(), ents.end(), p,
                                       [](const auto& a, int64_t k) { return a.first < k; });
            if (it != ents.end() && it->first == p) {
                Rational f = it->second;
                rref[i].axpy(-f, rref[j]);
            }
        }
    }
    std::vector<bool> is_pivot(n_, false);
    for (const auto& r : rref) is_pivot[static_cast<size_t>(r.lead())] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n_, Rational(0));
        x[f] = Rational(1);
        for (const auto& r : rref) {
            // pivot value = -(coefficient of f in this row)
            auto it = std::lower_bound(r.e.begin(), r.e.end(), static_cast<int64_t>(f),
                                       [](const auto& a, int64_t k) { return a.first < k; });
            if (it != r.e.end() && it->first == f) x[static_cast<size_t>(r.lead())] = -it->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

int dense_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace sg
