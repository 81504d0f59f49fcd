#include "supergeom/prolong.hpp"

#include <stdexcept>

namespace sg {

std::pair<int, int> ProlongationResult::total() const {
    int e = dim0.first, o = dim0.second;
    for (auto [a, b] : dims) {
        e += a;
        o += b;
    }
    for (auto [a, b] : negative) {
        e += a;
        o += b;
    }
    return {e, o};
}

namespace {

// Every level s of the prolongation has a finite basis:
//   s < 0 : the degree-s slice of m (ascending global index),
//   s = 0 : the given g0 derivations,
//   s > 0 : the computed degree-s maps.
// Values at level s are coordinate vectors over that basis.
struct HElement {
    Parity parity;
    std::vector<std::vector<Rational>> image;  // per m basis index: value in level deg+s
};

struct Builder {
    const GradedLSA& m;
    const std::vector<Derivation>& g0;
    std::vector<std::vector<HElement>> levels;  // levels[k-1] = basis of degree k
    std::map<int, std::vector<int>> slice;      // degree -> global m indices
    int depth = 0;

    Builder(const GradedLSA& mm, const std::vector<Derivation>& gg) : m(mm), g0(gg) {
        for (int i = 0; i < m.dim(); ++i) {
            slice[m.element(i).degree].push_back(i);
            depth = std::max(depth, -m.element(i).degree);
        }
    }

    int basis_count(int level) const {
        if (level < -depth) return 0;
        if (level < 0) {
            auto it = slice.find(level);
            return it == slice.end() ? 0 : static_cast<int>(it->second.size());
        }
        if (level == 0) return static_cast<int>(g0.size());
        if (level - 1 >= static_cast<int>(levels.size())) return 0;
        return static_cast<int>(levels[level - 1].size());
    }

    Parity basis_parity(int level, int t) const {
        if (level < 0) return m.element(slice.at(level)[t]).parity;
        if (level == 0) return g0[t].parity;
        return levels[level - 1][t].parity;
    }

    // project a full-m vector onto the slice coordinates of `level`
    std::vector<Rational> project(int level, const GradedLSA::Vec& v) const {
        auto it = slice.find(level);
        if (it == slice.end()) return {};
        std::vector<Rational> out;
        out.reserve(it->second.size());
        for (int g : it->second) out.push_back(v[g]);
        return out;
    }

    // [basis t of level s, m basis b] as a value in level s + deg(b)
    std::vector<Rational> bracket_basis(int s, int t, int b) const {
        int out_level = s + m.element(b).degree;
        if (s < 0) {
            int g = slice.at(s)[t];
            GradedLSA::Vec full = m.zero_vec();
            for (const auto& [k, c] : m.bracket(g, b)) full[k] = c;
            return project(out_level, full);
        }
        if (s == 0) return project(out_level, g0[t].matrix[b]);
        return levels[s - 1][t].image[b];
    }
};

}  // namespace

ProlongationResult tanaka_prolongation(const GradedLSA& m, const std::vector<Derivation>* g0in,
                                       int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("tanaka_prolongation: max_degree >= 0");
    std::vector<Derivation> g0 = g0in ? *g0in : derivations_gr(m);
    std::string w;
    if (!derivations_closed(m, g0, &w))
        throw std::invalid_argument(
            "tanaka_prolongation: g0 is not a subalgebra of derivations: " + w);

    ProlongationResult res;
    {
        int e = 0, o = 0;
        for (const auto& d : g0) (d.parity == Parity::Even ? e : o)++;
        res.dim0 = {e, o};
        std::map<int, std::pair<int, int>> neg;
        for (int i = 0; i < m.dim(); ++i) {
            auto& p = neg[-m.element(i).degree];
            (m.element(i).parity == Parity::Even ? p.first : p.second)++;
        }
        for (const auto& [d, p] : neg) {
            (void)d;
            res.negative.push_back(p);
        }
    }
    Builder B(m, g0);

    for (int k = 1; k <= max_degree; ++k) {
        std::vector<HElement> found;
        for (Parity pu : {Parity::Even, Parity::Odd}) {
            // unknown slots: (m basis b, target basis index t in level deg(b)+k)
            std::vector<std::pair<int, int>> slots;
            std::map<std::pair<int, int>, int> slot_id;
            for (int b = 0; b < m.dim(); ++b) {
                int tl = m.element(b).degree + k;
                for (int t = 0; t < B.basis_count(tl); ++t) {
                    if (B.basis_parity(tl, t) != m.element(b).parity + pu) continue;
                    slot_id[{b, t}] = static_cast<int>(slots.size());
                    slots.emplace_back(b, t);
                }
            }
            if (slots.empty()) continue;
            EqSystem sys(static_cast<int>(slots.size()));
            for (int x = 0; x < m.dim(); ++x) {
                for (int y = x; y < m.dim(); ++y) {
                    int out_level = m.element(x).degree + m.element(y).degree + k;
                    if (B.basis_count(out_level) == 0 && out_level < 0) continue;
                    std::map<int, SVec> rows;
                    auto add = [&](int coord, int slot, const Rational& c) {
                        if (!c.is_zero()) rows[coord].add(slot, c);
                    };
                    // u([x,y])
                    for (const auto& [z, c] : m.bracket(x, y)) {
                        int tl = m.element(z).degree + k;
                        for (int t = 0; t < B.basis_count(tl); ++t) {
                            auto it = slot_id.find({z, t});
                            if (it != slot_id.end()) add(t, it->second, c);
                        }
                    }
                    // -[u(x), y]
                    {
                        int tlx = m.element(x).degree + k;
                        for (int t = 0; t < B.basis_count(tlx); ++t) {
                            auto it = slot_id.find({x, t});
                            if (it == slot_id.end()) continue;
                            auto v = B.bracket_basis(tlx, t, y);
                            for (size_t i = 0; i < v.size(); ++i)
                                add(static_cast<int>(i), it->second, -v[i]);
                        }
                    }
                    // -(-1)^{|u||x|}[x, u(y)] with [x,v] = -(-1)^{|x||v|}[v,x]
                    {
                        int px = pint(m.element(x).parity);
                        int py = pint(m.element(y).parity);
                        int tly = m.element(y).degree + k;
                        int sflip = ((pint(pu) & px) ^ (px & ((py + pint(pu)) & 1))) ? -1 : 1;
                        for (int t = 0; t < B.basis_count(tly); ++t) {
                            auto it = slot_id.find({y, t});
                            if (it == slot_id.end()) continue;
                            auto v = B.bracket_basis(tly, t, x);
                            for (size_t i = 0; i < v.size(); ++i)
                                add(static_cast<int>(i), it->second, sflip < 0 ? -v[i] : v[i]);
                        }
                    }
                    for (auto& [coord, row] : rows) {
                        (void)coord;
                        if (!row.is_zero()) sys.add_equation(std::move(row));
                    }
                }
            }
            for (const auto& sol : sys.kernel_basis()) {
                HElement h;
                h.parity = pu;
                h.image.assign(m.dim(), {});
                for (int b = 0; b < m.dim(); ++b) {
                    int tl = m.element(b).degree + k;
                    h.image[b].assign(B.basis_count(tl), Rational(0));
                }
                for (size_t s = 0; s < slots.size(); ++s) {
                    if (sol[s].is_zero()) continue;
                    auto [b, t] = slots[s];
                    h.image[b][t] = sol[s];
                }
                found.push_back(std::move(h));
            }
        }
        int e = 0, o = 0;
        for (const auto& h : found) (h.parity == Parity::Even ? e : o)++;
        res.dims.emplace_back(e, o);
        B.levels.push_back(std::move(found));
        if (e + o == 0) {
            // the transitive prolongation of a fundamental m stays zero
            while (static_cast<int>(res.dims.size()) < max_degree) res.dims.emplace_back(0, 0);
            break;
        }
    }
    res.terminated = !res.dims.empty() && res.dims.back() == std::pair<int, int>{0, 0};
    return res;
}

}  // namespace sg
