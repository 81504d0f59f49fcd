#include "supergeom/lsa.hpp"

#include <algorithm>
#include <sstream>

namespace sg {

void GradedLSA::set_bracket(int i, int j, std::vector<std::pair<int, Rational>> value) {
    if (i > j) throw std::invalid_argument("set_bracket: expects i <= j");
    std::sort(value.begin(), value.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    value.erase(std::remove_if(value.begin(), value.end(),
                               [](const auto& p) { return p.second.is_zero(); }),
                value.end());
    if (value.empty())
        br_.erase({i, j});
    else
        br_[{i, j}] = std::move(value);
}

std::vector<std::pair<int, Rational>> GradedLSA::bracket(int i, int j) const {
    if (i <= j) {
        auto it = br_.find({i, j});
        return it == br_.end() ? std::vector<std::pair<int, Rational>>{} : it->second;
    }
    auto it = br_.find({j, i});
    if (it == br_.end()) return {};
    auto v = it->second;
    int s = (pint(basis_[i].parity) & pint(basis_[j].parity)) ? 1 : -1;
    for (auto& [k, c] : v)
        if (s < 0) c = -c;
    return v;
}

GradedLSA::Vec GradedLSA::bracket_vec(const Vec& x, const Vec& y) const {
    Vec r = zero_vec();
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            for (const auto& [k, c] : bracket(i, j)) r[k] += x[i] * y[j] * c;
        }
    }
    return r;
}

GradedLSA::Vec GradedLSA::basis_vec(int i) const {
    Vec v = zero_vec();
    v[i] = Rational(1);
    return v;
}

bool GradedLSA::degrees_additive(std::string* witness) const {
    for (const auto& [ij, v] : br_) {
        int d = basis_[ij.first].degree + basis_[ij.second].degree;
        for (const auto& [k, c] : v) {
            (void)c;
            if (basis_[k].degree != d) {
                if (witness)
                    *witness = "bracket [" + basis_[ij.first].label + "," +
                               basis_[ij.second].label + "] hits degree " +
                               std::to_string(basis_[k].degree) + " != " + std::to_string(d);
                return false;
            }
        }
    }
    return true;
}

bool GradedLSA::parity_additive(std::string* witness) const {
    for (const auto& [ij, v] : br_) {
        Parity p = basis_[ij.first].parity + basis_[ij.second].parity;
        for (const auto& [k, c] : v) {
            (void)c;
            if (basis_[k].parity != p) {
                if (witness)
                    *witness = "bracket [" + basis_[ij.first].label + "," +
                               basis_[ij.second].label + "] violates parity";
                return false;
            }
        }
    }
    return true;
}

bool GradedLSA::check_jacobi(std::string* witness) const {
    for (int i = 0; i < dim(); ++i) {
        for (int j = i; j < dim(); ++j) {
            Vec bij = zero_vec();
            for (const auto& [k, c] : bracket(i, j)) bij[k] = c;
            for (int k = j; k < dim(); ++k) {
                int pi = pint(basis_[i].parity), pj = pint(basis_[j].parity),
                    pk = pint(basis_[k].parity);
                Vec bjk = zero_vec();
                for (const auto& [m, c] : bracket(j, k)) bjk[m] = c;
                Vec bki = zero_vec();
                for (const auto& [m, c] : bracket(k, i)) bki[m] = c;
                // (-1)^{ik}[[i,j],k] + (-1)^{ji}[[j,k],i] + (-1)^{kj}[[k,i],j]
                Vec term1 = zero_vec(), term2 = zero_vec(), term3 = zero_vec();
                for (int m = 0; m < dim(); ++m) {
                    if (!bij[m].is_zero())
                        for (const auto& [n, c] : bracket(m, k)) term1[n] += bij[m] * c;
                    if (!bjk[m].is_zero())
                        for (const auto& [n, c] : bracket(m, i)) term2[n] += bjk[m] * c;
                    if (!bki[m].is_zero())
                        for (const auto& [n, c] : bracket(m, j)) term3[n] += bki[m] * c;
                }
                bool bad = false;
                for (int n = 0; n < dim() && !bad; ++n) {
                    Rational s(0);
                    s += (pi & pk) ? -term1[n] : term1[n];
                    s += (pj & pi) ? -term2[n] : term2[n];
                    s += (pk & pj) ? -term3[n] : term3[n];
                    if (!s.is_zero()) bad = true;
                }
                if (bad) {
                    if (witness)
                        *witness = "Jacobi fails on (" + basis_[i].label + "," + basis_[j].label +
                                   "," + basis_[k].label + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

std::map<int, std::pair<int, int>> GradedLSA::graded_dims() const {
    std::map<int, std::pair<int, int>> r;
    for (const auto& b : basis_) {
        auto& p = r[b.degree];
        if (b.parity == Parity::Even)
            ++p.first;
        else
            ++p.second;
    }
    return r;
}

std::vector<int> GradedLSA::indices_of_degree(int d) const {
    std::vector<int> r;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].degree == d) r.push_back(i);
    return r;
}

std::vector<int> GradedLSA::indices_of_degree_parity(int d, Parity p) const {
    std::vector<int> r;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].degree == d && basis_[i].parity == p) r.push_back(i);
    return r;
}

std::vector<GradedLSA::Vec> GradedLSA::centralizer(const std::vector<Vec>& span) const {
    EqSystem sys(dim());
    for (const auto& s : span) {
        // for each output coordinate k: sum_i x_i ([e_i, s])_k = 0
        std::vector<SVec> rows(dim());
        for (int i = 0; i < dim(); ++i) {
            for (int j = 0; j < dim(); ++j) {
                if (s[j].is_zero()) continue;
                for (const auto& [k, c] : bracket(i, j)) rows[k].add(i, c * s[j]);
            }
        }
        for (auto& r : rows)
            if (!r.is_zero()) sys.add_equation(std::move(r));
    }
    return sys.kernel_basis();
}

std::pair<int, int> GradedLSA::parity_split(const GradedLSA& L, const std::vector<Vec>& vecs) {
    LinearSpan even_span, odd_span;
    for (const auto& v : vecs) {
        SVec e, o;
        for (int i = 0; i < L.dim(); ++i) {
            if (v[i].is_zero()) continue;
            if (L.element(i).parity == Parity::Even)
                e.add(i, v[i]);
            else
                o.add(i, v[i]);
        }
        if (!e.is_zero()) even_span.insert(e);
        if (!o.is_zero()) odd_span.insert(o);
    }
    return {even_span.rank(), odd_span.rank()};
}

int GradedLSA::killing_rank() const {
    std::vector<std::vector<Rational>> K(dim(), std::vector<Rational>(dim(), Rational(0)));
    for (int x = 0; x < dim(); ++x) {
        for (int y = x; y < dim(); ++y) {
            Rational tr(0);
            for (int m = 0; m < dim(); ++m) {
                Rational d(0);
                for (const auto& [k, c] : bracket(y, m)) {
                    for (const auto& [n, c2] : bracket(x, k))
                        if (n == m) d += c * c2;
                }
                if (basis_[m].parity == Parity::Odd)
                    tr -= d;
                else
                    tr += d;
            }
            K[x][y] = tr;
            K[y][x] = (pint(basis_[x].parity) & pint(basis_[y].parity)) ? -tr : tr;
        }
    }
    return dense_rank(std::move(K));
}

GradedLSA GradedLSA::negative_part() const {
    std::vector<int> remap(dim(), -1);
    std::vector<BasisElement> nb;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].degree < 0) {
            remap[i] = static_cast<int>(nb.size());
            nb.push_back(basis_[i]);
        }
    GradedLSA m(std::move(nb));
    for (const auto& [ij, v] : br_) {
        int i = remap[ij.first], j = remap[ij.second];
        if (i < 0 || j < 0) continue;
        std::vector<std::pair<int, Rational>> w;
        for (const auto& [k, c] : v) {
            if (remap[k] < 0)
                throw std::logic_error("negative_part: bracket leaves the negative part");
            w.emplace_back(remap[k], c);
        }
        m.set_bracket(i, j, std::move(w));
    }
    return m;
}

std::string GradedLSA::bracket_fingerprint() const {
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < dim(); ++i) by_degree[basis_[i].degree].push_back(i);
    std::ostringstream os;
    for (const auto& [di, vi] : by_degree) {
        for (const auto& [dj, vj] : by_degree) {
            if (di > dj) continue;
            std::vector<std::vector<Rational>> m;
            for (int a : vi)
                for (int b : vj) {
                    if (di == dj && a > b) continue;
                    std::vector<Rational> row(dim(), Rational(0));
                    for (const auto& [k, c] : bracket(a, b)) row[k] = c;
                    m.push_back(std::move(row));
                }
            if (m.empty()) continue;
            int r = dense_rank(std::move(m));
            if (r) os << "(" << di << "," << dj << ")->" << r << ";";
        }
    }
    for (const auto& [d, p] : graded_dims())
        os << "dim[" << d << "]=" << p.first << "|" << p.second << ";";
    return os.str();
}

namespace {

struct FieldEncoder {
    std::map<Monomial, int64_t> ids;
    int64_t next = 0;

    SVec encode(const SuperVectorField& X) {
        SVec v;
        for (const auto& [c, p] : X.coeffs()) {
            for (const auto& [m, coef] : p.terms()) {
                auto it = ids.find(m);
                int64_t id;
                if (it == ids.end()) {
                    id = next++;
                    ids.emplace(m, id);
                } else {
                    id = it->second;
                }
                v.add(static_cast<int64_t>(c) * (1LL << 40) + id, coef);
            }
        }
        return v;
    }
};

int field_weighted_degree(const SuperVectorField& X, bool* homogeneous) {
    *homogeneous = true;
    bool seen = false;
    int deg = 0;
    for (const auto& [c, p] : X.coeffs()) {
        if (p.is_zero()) continue;
        int w = X.chart()->var(c).weight;
        for (const auto& [m, coef] : p.terms()) {
            (void)coef;
            int d = p.weighted_degree_of(m) - w;
            if (!seen) {
                deg = d;
                seen = true;
            } else if (d != deg) {
                *homogeneous = false;
            }
        }
    }
    return deg;
}

}  // namespace

FieldAlgebraResult lsa_from_vector_fields(const std::vector<SuperVectorField>& fields,
                                          bool closure_check) {
    FieldAlgebraResult res;
    int n = static_cast<int>(fields.size());
    std::vector<GradedLSA::BasisElement> basis(n);
    for (int i = 0; i < n; ++i) {
        bool hom = true;
        int d = field_weighted_degree(fields[i], &hom);
        if (!hom)
            throw std::invalid_argument("lsa_from_vector_fields: field " + std::to_string(i) +
                                        " is not weighted-homogeneous");
        if (!fields[i].parity_consistent())
            throw std::invalid_argument("lsa_from_vector_fields: field " + std::to_string(i) +
                                        " has inconsistent parity");
        basis[i] = {"g" + std::to_string(i), fields[i].parity(), d};
    }
    FieldEncoder enc;
    LinearSpan span;
    for (int i = 0; i < n; ++i) {
        if (!span.insert(enc.encode(fields[i])))
            throw std::invalid_argument("lsa_from_vector_fields: fields are linearly dependent");
    }
    GradedLSA L(std::move(basis));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            SuperVectorField b = lie_bracket(fields[i], fields[j]);
            if (b.is_zero()) continue;
            auto x = span.express(enc.encode(b));
            if (!x) {
                res.closed = false;
                res.failure = "bracket of fields " + std::to_string(i) + "," +
                              std::to_string(j) + " leaves the span";
                if (closure_check) return res;
                continue;
            }
            std::vector<std::pair<int, Rational>> val;
            for (int k = 0; k < n; ++k)
                if (!(*x)[k].is_zero()) val.emplace_back(k, (*x)[k]);
            L.set_bracket(i, j, std::move(val));
        }
    }
    res.algebra = std::move(L);
    return res;
}

std::vector<Derivation> derivations_gr(const GradedLSA& m) {
    int n = m.dim();
    std::vector<Derivation> out;
    for (Parity p : {Parity::Even, Parity::Odd}) {
        std::vector<std::pair<int, int>> slots;  // (target a, source b)
        std::map<std::pair<int, int>, int> slot_id;
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a)
                if (m.element(a).degree == m.element(b).degree &&
                    m.element(a).parity == m.element(b).parity + p) {
                    slot_id[{a, b}] = static_cast<int>(slots.size());
                    slots.emplace_back(a, b);
                }
        if (slots.empty()) continue;
        EqSystem sys(static_cast<int>(slots.size()));
        for (int x = 0; x < n; ++x) {
            for (int y = x; y < n; ++y) {
                std::map<int, SVec> rows;
                for (const auto& [z, c] : m.bracket(x, y)) {
                    for (int k = 0; k < n; ++k) {
                        auto it = slot_id.find({k, z});
                        if (it != slot_id.end()) rows[k].add(it->second, c);
                    }
                }
                for (int a = 0; a < n; ++a) {
                    auto it = slot_id.find({a, x});
                    if (it == slot_id.end()) continue;
                    for (const auto& [k, c] : m.bracket(a, y)) rows[k].add(it->second, -c);
                }
                int sgn = (pint(p) & pint(m.element(x).parity)) ? -1 : 1;
                for (int a = 0; a < n; ++a) {
                    auto it = slot_id.find({a, y});
                    if (it == slot_id.end()) continue;
                    for (const auto& [k, c] : m.bracket(x, a))
                        rows[k].add(it->second, sgn < 0 ? c : -c);
                }
                for (auto& [k, r] : rows) {
                    (void)k;
                    if (!r.is_zero()) sys.add_equation(std::move(r));
                }
            }
        }
        for (const auto& sol : sys.kernel_basis()) {
            Derivation d;
            d.parity = p;
            d.matrix.assign(n, GradedLSA::Vec(n, Rational(0)));
            for (size_t s = 0; s < slots.size(); ++s) {
                if (sol[s].is_zero()) continue;
                d.matrix[slots[s].second][slots[s].first] = sol[s];
            }
            out.push_back(std::move(d));
        }
    }
    return out;
}

bool derivations_closed(const GradedLSA& m, const std::vector<Derivation>& g0,
                        std::string* witness) {
    int n = m.dim();
    for (size_t d = 0; d < g0.size(); ++d) {
        const auto& D = g0[d];
        for (int x = 0; x < n; ++x) {
            for (int y = x; y < n; ++y) {
                GradedLSA::Vec lhs = m.zero_vec();
                for (const auto& [z, c] : m.bracket(x, y))
                    for (int k = 0; k < n; ++k) lhs[k] += c * D.matrix[z][k];
                GradedLSA::Vec rhs = m.bracket_vec(D.matrix[x], m.basis_vec(y));
                GradedLSA::Vec t = m.bracket_vec(m.basis_vec(x), D.matrix[y]);
                int sgn = (pint(D.parity) & pint(m.element(x).parity)) ? -1 : 1;
                for (int k = 0; k < n; ++k) rhs[k] += sgn < 0 ? -t[k] : t[k];
                for (int k = 0; k < n; ++k)
                    if (lhs[k] != rhs[k]) {
                        if (witness)
                            *witness = "element " + std::to_string(d) + " is not a derivation";
                        return false;
                    }
            }
        }
    }
    LinearSpan span;
    auto encode = [&](const std::vector<GradedLSA::Vec>& mat) {
        SVec v;
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) v.add(static_cast<int64_t>(b) * n + a, mat[b][a]);
        return v;
    };
    for (const auto& D : g0) span.insert(encode(D.matrix));
    for (size_t i = 0; i < g0.size(); ++i) {
        for (size_t j = i; j < g0.size(); ++j) {
            std::vector<GradedLSA::Vec> comm(n, GradedLSA::Vec(n, Rational(0)));
            int sgn = (pint(g0[i].parity) & pint(g0[j].parity)) ? 1 : -1;
            for (int b = 0; b < n; ++b) {
                for (int k = 0; k < n; ++k) {
                    if (g0[j].matrix[b][k].is_zero()) continue;
                    for (int a = 0; a < n; ++a)
                        comm[b][a] += g0[j].matrix[b][k] * g0[i].matrix[k][a];
                }
                for (int k = 0; k < n; ++k) {
                    if (g0[i].matrix[b][k].is_zero()) continue;
                    for (int a = 0; a < n; ++a) {
                        // - (-1)^{|D_i||D_j|} D_j D_i
                        Rational t = g0[i].matrix[b][k] * g0[j].matrix[k][a];
                        comm[b][a] += sgn > 0 ? t : -t;
                    }
                }
            }
            if (!span.contains(encode(comm))) {
                if (witness)
                    *witness = "commutator [" + std::to_string(i) + "," + std::to_string(j) +
                               "] leaves the span";
                return false;
            }
        }
    }
    return true;
}

}  // namespace sg
