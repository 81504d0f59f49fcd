#include "supergeom/spencer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sg {

SpencerComplex::SpencerComplex(const GradedLSA& g) : g_(g) {
    for (int i = 0; i < g.dim(); ++i)
        if (g.element(i).degree < 0) m_.push_back(i);
}

bool SpencerComplex::all_even(const std::vector<int>& t) const {
    for (int i : t)
        if (g_.element(i).parity == Parity::Odd) return false;
    return true;
}

int SpencerComplex::tuple_degree(const std::vector<int>& t) const {
    int d = 0;
    for (int i : t) d += g_.element(i).degree;
    return d;
}

Parity SpencerComplex::tuple_parity(const std::vector<int>& t) const {
    int p = 0;
    for (int i : t) p ^= pint(g_.element(i).parity);
    return static_cast<Parity>(p);
}

std::vector<std::vector<int>> SpencerComplex::tuples(int n) const {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < m_.size(); ++i) {
            int idx = m_[i];
            if (!cur.empty() && cur.back() == idx && g_.element(idx).parity == Parity::Even)
                continue;
            cur.push_back(idx);
            rec(i);  // repetition allowed only for odd slots (filtered above)
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int SpencerComplex::canonicalize(std::vector<int>& t) const {
    int sign = 1;
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        for (size_t j = 0; j + 1 < t.size() - i; ++j) {
            if (t[j] > t[j + 1]) {
                bool both_odd = g_.element(t[j]).parity == Parity::Odd &&
                                g_.element(t[j + 1]).parity == Parity::Odd;
                if (!both_odd) sign = -sign;
                std::swap(t[j], t[j + 1]);
            }
        }
    }
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1] && g_.element(t[i]).parity == Parity::Even) return 0;
    return sign;
}

int SpencerComplex::eval_sign(const std::vector<int>& T, const std::vector<int>& S) const {
    std::vector<int> s = S;
    int sign = canonicalize(s);
    if (sign == 0 || s != T) return 0;
    return sign;
}

SpencerComplex::Basis SpencerComplex::block(int n, int d, Parity p, bool restricted) const {
    Basis b;
    for (const auto& t : tuples(n)) {
        if (restricted && (n == 0 || all_even(t))) continue;
        int sdeg = tuple_degree(t);
        Parity spar = tuple_parity(t);
        for (int k = 0; k < g_.dim(); ++k) {
            if (g_.element(k).degree - sdeg != d) continue;
            if (g_.element(k).parity + spar != p) continue;
            b.elems.emplace_back(t, k);
        }
    }
    return b;
}

GradedLSA::Vec SpencerComplex::apply_d(int n, const std::vector<int>& T, int k,
                                       const std::vector<int>& S) const {
    GradedLSA::Vec out = g_.zero_vec();
    auto phi = [&](const std::vector<int>& args) { return eval_sign(T, args); };
    auto act = [&](int x, int coeff) {
        if (coeff == 0) return;
        for (const auto& [l, c] : g_.bracket(x, k))
            out[l] += coeff > 0 ? c : -c;
    };
    int pphi = pint(g_.element(k).parity) ^ pint(tuple_parity(T));
    if (n == 0) {
        int x = S[0];
        int s = (pint(g_.element(x).parity) & pphi) ? -1 : 1;
        act(x, s);
        return out;
    }
    if (n == 1) {
        int X = S[0], Y = S[1];
        int x = pint(g_.element(X).parity), y = pint(g_.element(Y).parity);
        act(X, ((x & pphi) ? -1 : 1) * phi({Y}));
        act(Y, ((y & ((x + pphi) & 1)) ? 1 : -1) * phi({X}));
        for (const auto& [z, c] : g_.bracket(X, Y)) {
            int s = phi({z});
            if (s != 0) {
                Rational v = c;
                if (s < 0) v = -v;
                out[k] -= v;
            }
        }
        return out;
    }
    if (n == 2) {
        int X = S[0], Y = S[1], Z = S[2];
        int x = pint(g_.element(X).parity), y = pint(g_.element(Y).parity),
            z = pint(g_.element(Z).parity);
        act(X, ((x & pphi) ? -1 : 1) * phi({Y, Z}));
        act(Y, ((y & ((x + pphi) & 1)) ? 1 : -1) * phi({X, Z}));
        act(Z, ((z & ((x + y + pphi) & 1)) ? -1 : 1) * phi({X, Y}));
        auto bracket_term = [&](int A, int B, int C, int sgn) {
            for (const auto& [w, c] : g_.bracket(A, B)) {
                int s = phi({w, C});
                if (s == 0) continue;
                Rational v = c;
                if ((s < 0) != (sgn < 0)) v = -v;
                out[k] -= v;
            }
        };
        bracket_term(X, Y, Z, 1);
        bracket_term(Y, Z, X, (x & ((y + z) & 1)) ? -1 : 1);
        bracket_term(Z, X, Y, (z & ((x + y) & 1)) ? -1 : 1);
        return out;
    }
    throw std::invalid_argument("apply_d: only n <= 2 differentials are needed");
}

SpencerComplex::Matrix SpencerComplex::differential(int n, int d, Parity p,
                                                    bool restricted) const {
    Basis src = block(n, d, p, restricted);
    Basis dst = block(n + 1, d, p, restricted);
    std::map<std::pair<std::vector<int>, int>, int> dst_index;
    for (size_t i = 0; i < dst.elems.size(); ++i) dst_index[dst.elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> dst_tuples;
    {
        std::set<std::vector<int>> seen;
        for (const auto& [t, k] : dst.elems)
            if (seen.insert(t).second) dst_tuples.push_back(t);
    }
    Matrix mat;
    mat.rows = static_cast<int>(dst.elems.size());
    mat.cols.resize(src.elems.size());
    for (size_t c = 0; c < src.elems.size(); ++c) {
        const auto& [T, k] = src.elems[c];
        for (const auto& S : dst_tuples) {
            GradedLSA::Vec v = apply_d(n, T, k, S);
            for (int l = 0; l < g_.dim(); ++l) {
                if (v[l].is_zero()) continue;
                auto it = dst_index.find({S, l});
                if (it == dst_index.end()) {
                    // the image of a restricted cochain can have components on
                    // all-even tuples only if something is inconsistent
                    throw std::logic_error("differential: image outside the block");
                }
                mat.cols[c].add(it->second, v[l]);
            }
        }
    }
    return mat;
}

namespace {

int matrix_rank(const SpencerComplex::Matrix& m) {
    int r = 0;
    LinearSpan span;
    for (const auto& c : m.cols)
        if (!c.is_zero() && span.insert(c)) ++r;
    return r;
}

}  // namespace

std::pair<int, int> SpencerComplex::H(int d, int n, bool restricted) const {
    std::pair<int, int> out{0, 0};
    for (Parity p : {Parity::Even, Parity::Odd}) {
        Basis cn = block(n, d, p, restricted);
        Matrix dn = differential(n, d, p, restricted);
        int rank_dn = matrix_rank(dn);
        int ker = static_cast<int>(cn.elems.size()) - rank_dn;
        int rank_prev = 0;
        if (n > 0) {
            Matrix dprev = differential(n - 1, d, p, restricted);
            rank_prev = matrix_rank(dprev);
        }
        int h = ker - rank_prev;
        if (h < 0) throw std::logic_error("spencer H: negative dimension");
        (p == Parity::Even ? out.first : out.second) = h;
    }
    return out;
}

bool SpencerComplex::d_squared_zero(int d, Parity p, bool restricted) const {
    for (int n = 0; n + 1 <= 2; ++n) {
        Matrix a = differential(n, d, p, restricted);
        Matrix b = differential(n + 1, d, p, restricted);
        for (const auto& col : a.cols) {
            SVec acc;
            for (const auto& [i, c] : col.e) acc.axpy(c, b.cols[static_cast<size_t>(i)]);
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

bool SpencerComplex::equivariance_check(int n, int d, Parity p) const {
    auto deg0 = g_.indices_of_degree_parity(0, Parity::Even);
    if (deg0.empty()) return true;
    Basis src = block(n, d, p, false);
    Basis dst = block(n + 1, d, p, false);
    std::map<std::pair<std::vector<int>, int>, int> src_index, dst_index;
    for (size_t i = 0; i < src.elems.size(); ++i) src_index[src.elems[i]] = static_cast<int>(i);
    for (size_t i = 0; i < dst.elems.size(); ++i) dst_index[dst.elems[i]] = static_cast<int>(i);
    Matrix dmat = differential(n, d, p, false);

    auto action = [&](int D, const Basis& basis,
                      const std::map<std::pair<std::vector<int>, int>, int>& index,
                      const SVec& v) {
        SVec out;
        for (const auto& [ci, coeff] : v.e) {
            const auto& [T, k] = basis.elems[static_cast<size_t>(ci)];
            for (const auto& [l, c] : g_.bracket(D, k)) {
                auto it = index.find({T, l});
                if (it != index.end()) out.add(it->second, coeff * c);
            }
            for (size_t slot = 0; slot < T.size(); ++slot) {
                for (const auto& [w, c] : g_.bracket(D, T[slot])) {
                    std::vector<int> t2 = T;
                    t2[slot] = w;
                    int s = canonicalize(t2);
                    if (s == 0) continue;
                    auto it = index.find({t2, k});
                    if (it != index.end()) {
                        Rational vv = coeff * c;
                        if (s < 0) vv = -vv;
                        out.add(it->second, -vv);
                    }
                }
            }
        }
        return out;
    };

    for (size_t trial = 0; trial < std::min<size_t>(3, deg0.size()); ++trial) {
        int D = deg0[trial];
        for (size_t c = 0; c < src.elems.size(); ++c) {
            SVec phi;
            phi.add(static_cast<int64_t>(c), Rational(1));
            SVec lhs;
            SVec Dphi = action(D, src, src_index, phi);
            for (const auto& [i, coeff] : Dphi.e)
                lhs.axpy(coeff, dmat.cols[static_cast<size_t>(i)]);
            SVec rhs = action(D, dst, dst_index, dmat.cols[c]);
            lhs.axpy(Rational(-1), rhs);
            if (!lhs.is_zero()) return false;
        }
    }
    return true;
}

bool SpencerComplex::curvature_normal_form_check(std::string* witness) const {
    Basis src = block(2, 2, Parity::Even, false);
    Matrix dn = differential(2, 2, Parity::Even, false);
    std::map<std::pair<std::vector<int>, int>, int> src_index;
    for (size_t i = 0; i < src.elems.size(); ++i) src_index[src.elems[i]] = static_cast<int>(i);

    // kernel of the differential
    EqSystem sys(static_cast<int>(src.elems.size()));
    {
        std::map<int64_t, SVec> rows;
        for (size_t c = 0; c < dn.cols.size(); ++c)
            for (const auto& [r, v] : dn.cols[c].e) rows[r].add(static_cast<int64_t>(c), v);
        for (auto& [r, eq] : rows) {
            (void)r;
            sys.add_equation(std::move(eq));
        }
    }
    auto kernel = sys.kernel_basis();
    if (kernel.empty()) {
        if (witness) *witness = "no 2-cocycles in the (2,2,even) block";
        return false;
    }

    auto h_idx = g_.indices_of_degree_parity(-2, Parity::Even);
    auto e_idx = g_.indices_of_degree_parity(-1, Parity::Even);
    auto eps_idx = g_.indices_of_degree_parity(-1, Parity::Odd);
    auto rho_idx = g_.indices_of_degree_parity(-2, Parity::Odd);
    if (h_idx.size() != 1 || e_idx.size() != 2 || eps_idx.size() != 4 || rho_idx.size() != 2) {
        if (witness) *witness = "not the depth-3 grading expected by the normal form";
        return false;
    }
    int h = h_idx[0];

    // gauge tuples: all pairs with the (g_-2)-even generator in a slot
    std::vector<std::vector<int>> gauge_tuples;
    auto add_gauge = [&](int other) {
        std::vector<int> t = {h, other};
        canonicalize(t);
        gauge_tuples.push_back(t);
    };
    for (int e : eps_idx) add_gauge(e);
    for (int r : rho_idx) add_gauge(r);
    for (int e : e_idx) add_gauge(e);
    auto is_gauge_component = [&](size_t idx) {
        const auto& T = src.elems[idx].first;
        return std::find(gauge_tuples.begin(), gauge_tuples.end(), T) != gauge_tuples.end();
    };

    Basis c1 = block(1, 2, Parity::Even, false);
    Matrix d1 = differential(1, 2, Parity::Even, false);

    auto eval_cochain = [&](const std::vector<Rational>& phi, int a, int b) {
        // value of phi on the (possibly non-canonical) pair (a,b) as a g-vector
        std::vector<int> t = {a, b};
        int s = canonicalize(t);
        GradedLSA::Vec out = g_.zero_vec();
        if (s == 0) return out;
        for (int k = 0; k < g_.dim(); ++k) {
            auto it = src_index.find({t, k});
            if (it == src_index.end()) continue;
            Rational v = phi[it->second];
            if (s < 0) v = -v;
            out[k] += v;
        }
        return out;
    };

    for (const auto& phi0 : kernel) {
        // normalize: find psi with (phi0 - d psi) vanishing on gauge components.
        // Solve the linear system on the gauge rows.
        EqSystem gsys(static_cast<int>(c1.elems.size()) + 1);
        std::map<int64_t, SVec> rows;
        for (size_t c = 0; c < d1.cols.size(); ++c)
            for (const auto& [r, v] : d1.cols[c].e)
                if (is_gauge_component(static_cast<size_t>(r)))
                    rows[r].add(static_cast<int64_t>(c), v);
        for (size_t r = 0; r < src.elems.size(); ++r)
            if (is_gauge_component(r) && !phi0[r].is_zero())
                rows[static_cast<int64_t>(r)].add(static_cast<int64_t>(c1.elems.size()),
                                                  -phi0[r]);
        for (auto& [r, eq] : rows) {
            (void)r;
            gsys.add_equation(std::move(eq));
        }
        std::vector<Rational> psi(c1.elems.size(), Rational(0));
        bool found = false;
        for (const auto& sol : gsys.kernel_basis()) {
            if (sol.back().is_zero()) continue;
            Rational inv = sol.back().inverse();
            for (size_t i = 0; i < psi.size(); ++i) psi[i] = sol[i] * inv;
            found = true;
            break;
        }
        if (!found) {
            if (witness) *witness = "gauge normalization infeasible";
            return false;
        }
        std::vector<Rational> phi(phi0);
        for (size_t c = 0; c < psi.size(); ++c) {
            if (psi[c].is_zero()) continue;
            for (const auto& [r, v] : d1.cols[c].e) phi[static_cast<size_t>(r)] -= psi[c] * v;
        }
        for (size_t r = 0; r < src.elems.size(); ++r)
            if (is_gauge_component(r) && !phi[r].is_zero()) {
                if (witness) *witness = "normalized representative fails the gauge condition";
                return false;
            }
        // cocycle condition: phi(eps, [e,h]) + [phi(e,eps), h] = 0
        for (int e : e_idx) {
            GradedLSA::Vec f = g_.zero_vec();
            for (const auto& [k, c] : g_.bracket(e, h)) f[k] = c;
            for (int eps : eps_idx) {
                GradedLSA::Vec lhs = g_.zero_vec();
                for (int k = 0; k < g_.dim(); ++k) {
                    if (f[k].is_zero()) continue;
                    GradedLSA::Vec v = eval_cochain(phi, eps, k);
                    for (int l = 0; l < g_.dim(); ++l) lhs[l] += f[k] * v[l];
                }
                GradedLSA::Vec w = eval_cochain(phi, e, eps);
                GradedLSA::Vec hb = g_.bracket_vec(w, g_.basis_vec(h));
                for (int l = 0; l < g_.dim(); ++l) lhs[l] += hb[l];
                for (int l = 0; l < g_.dim(); ++l)
                    if (!lhs[l].is_zero()) {
                        if (witness)
                            *witness = "normalized cocycle fails the curvature relation";
                        return false;
                    }
            }
        }
    }
    return true;
}

}  // namespace sg
