#include "supergeom/superpoly.hpp"

#include <bit>
#include <sstream>

namespace sg {

std::shared_ptr<const VariableTable> VariableTable::make(
    std::vector<std::tuple<std::string, Parity, int>> vars) {
    auto t = std::make_shared<VariableTable>();
    for (auto& [name, parity, weight] : vars) {
        if (t->by_name_.count(name))
            throw std::invalid_argument("VariableTable: duplicate variable " + name);
        Var v;
        v.name = name;
        v.parity = parity;
        v.weight = weight;
        if (parity == Parity::Even) {
            v.slot = t->even_count_++;
            t->even_index_.push_back(static_cast<int>(t->vars_.size()));
        } else {
            v.slot = t->odd_count_++;
            if (t->odd_count_ > 64)
                throw std::invalid_argument("VariableTable: more than 64 odd variables");
            t->odd_index_.push_back(static_cast<int>(t->vars_.size()));
        }
        t->by_name_[name] = static_cast<int>(t->vars_.size());
        t->vars_.push_back(std::move(v));
    }
    return t;
}

int VariableTable::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

int VariableTable::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + name);
    return i;
}

int odd_mul_sign(uint64_t a, uint64_t b) {
    if (a & b) return 0;
    // count pairs (i in a, j in b) with i > j
    int inv = 0;
    uint64_t bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        uint64_t higher = (j == 63) ? 0 : (a >> (j + 1));
        inv += std::popcount(higher);
    }
    return (inv & 1) ? -1 : 1;
}

void SuperPolynomial::check_same_table(const SuperPolynomial& o) const {
    if (table_.get() != o.table_.get())
        throw std::invalid_argument("SuperPolynomial: mismatched variable tables");
}

SuperPolynomial SuperPolynomial::constant(TablePtr table, const Rational& c) {
    SuperPolynomial p(std::move(table));
    if (!c.is_zero()) {
        Monomial m;
        m.even.assign(p.table_->even_count(), 0);
        p.terms_[m] = c;
    }
    return p;
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, int index) {
    SuperPolynomial p(std::move(table));
    const auto& v = p.table_->var(index);
    Monomial m;
    m.even.assign(p.table_->even_count(), 0);
    if (v.parity == Parity::Even)
        m.even[v.slot] = 1;
    else
        m.odd = 1ULL << v.slot;
    p.terms_[m] = Rational(1);
    return p;
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, const std::string& name) {
    int i = table->require(name);
    return variable(std::move(table), i);
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial& o) const {
    check_same_table(o);
    SuperPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    check_same_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    check_same_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial& o) const {
    SuperPolynomial r = *this;
    r -= o;
    return r;
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial& o) const {
    check_same_table(o);
    SuperPolynomial r(table_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            int s = odd_mul_sign(ma.odd, mb.odd);
            if (s == 0) continue;
            Monomial m;
            m.odd = ma.odd | mb.odd;
            m.even.resize(ma.even.size());
            for (size_t i = 0; i < ma.even.size(); ++i)
                m.even[i] = static_cast<uint16_t>(ma.even[i] + mb.even[i]);
            Rational c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

SuperPolynomial SuperPolynomial::operator*(const Rational& c) const {
    SuperPolynomial r(table_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

SuperPolynomial SuperPolynomial::pow(int n) const {
    if (n < 0) throw std::invalid_argument("SuperPolynomial: negative power");
    SuperPolynomial r = constant(table_, Rational(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

SuperPolynomial SuperPolynomial::partial_left(const std::string& name) const {
    return partial_left(table_->require(name));
}

SuperPolynomial SuperPolynomial::partial_left(int index) const {
    const auto& v = table_->var(index);
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_) {
        if (v.parity == Parity::Even) {
            if (m.even[v.slot] == 0) continue;
            Monomial d = m;
            d.even[v.slot] -= 1;
            r.add_term(d, c * Rational(m.even[v.slot]));
        } else {
            uint64_t bit = 1ULL << v.slot;
            if (!(m.odd & bit)) continue;
            Monomial d = m;
            d.odd &= ~bit;
            int before = std::popcount(m.odd & (bit - 1));
            r.add_term(d, (before & 1) ? -c : c);
        }
    }
    return r;
}

SuperPolynomial SuperPolynomial::substitute(const std::map<int, SuperPolynomial>& bindings) const {
    for (const auto& [idx, val] : bindings) {
        const auto& v = table_->var(idx);
        if (val.table().get() != table_.get())
            throw std::invalid_argument("substitute: binding over a different table");
        if (!val.is_zero() && !val.parity_homogeneous(v.parity))
            throw std::invalid_argument("substitute: parity mismatch for " + v.name);
    }
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_) {
        SuperPolynomial acc = constant(table_, c);
        for (int s = 0; s < table_->even_count() && !acc.is_zero(); ++s) {
            uint16_t e = m.even[s];
            if (!e) continue;
            int idx = table_->even_slot_to_index(s);
            auto it = bindings.find(idx);
            if (it == bindings.end()) {
                Monomial mm;
                mm.even.assign(table_->even_count(), 0);
                mm.even[s] = e;
                SuperPolynomial x(table_);
                x.terms_[mm] = Rational(1);
                acc = acc * x;
            } else {
                acc = acc * it->second.pow(e);
            }
        }
        // odd factors in canonical order
        uint64_t mask = m.odd;
        while (mask && !acc.is_zero()) {
            int b = std::countr_zero(mask);
            mask &= mask - 1;
            int idx = table_->odd_bit_to_index(b);
            auto it = bindings.find(idx);
            if (it == bindings.end()) {
                acc = acc * variable(table_, idx);
            } else {
                acc = acc * it->second;
            }
        }
        r += acc;
    }
    return r;
}

SuperPolynomial SuperPolynomial::transport(const TablePtr& to) const {
    SuperPolynomial r(to);
    for (const auto& [m, c] : terms_) {
        Monomial mm;
        mm.even.assign(to->even_count(), 0);
        int sign = 1;
        for (int s = 0; s < table_->even_count(); ++s) {
            if (!m.even[s]) continue;
            const auto& v = table_->var(table_->even_slot_to_index(s));
            int j = to->require(v.name);
            mm.even[to->var(j).slot] = m.even[s];
        }
        // Odd bits: map positions; the relative order of odd variables must be
        // preserved by name-compatible tables used in this engine, but compute
        // the permutation sign anyway.
        std::vector<int> newbits;
        uint64_t mask = m.odd;
        while (mask) {
            int b = std::countr_zero(mask);
            mask &= mask - 1;
            const auto& v = table_->var(table_->odd_bit_to_index(b));
            int j = to->require(v.name);
            newbits.push_back(to->var(j).slot);
        }
        for (size_t i = 0; i < newbits.size(); ++i)
            for (size_t j = i + 1; j < newbits.size(); ++j)
                if (newbits[i] > newbits[j]) sign = -sign;
        for (int b : newbits) {
            uint64_t bit = 1ULL << b;
            if (mm.odd & bit) { sign = 0; break; }
            mm.odd |= bit;
        }
        if (sign == 0) continue;
        r.add_term(mm, sign < 0 ? -c : c);
    }
    return r;
}

Rational SuperPolynomial::eval_classical(const std::map<int, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        if (m.odd) continue;
        Rational v = c;
        bool zero = false;
        for (int s = 0; s < table_->even_count(); ++s) {
            uint16_t e = m.even[s];
            if (!e) continue;
            int idx = table_->even_slot_to_index(s);
            auto it = point.find(idx);
            Rational x = it == point.end() ? Rational(0) : it->second;
            if (x.is_zero()) { zero = true; break; }
            for (int k = 0; k < e; ++k) v *= x;
        }
        if (!zero) total += v;
    }
    return total;
}

std::optional<Parity> SuperPolynomial::parity() const {
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
        Parity q = (std::popcount(m.odd) & 1) ? Parity::Odd : Parity::Even;
        if (!p)
            p = q;
        else if (*p != q)
            return std::nullopt;
    }
    return p;
}

bool SuperPolynomial::parity_homogeneous(Parity p) const {
    for (const auto& [m, c] : terms_) {
        Parity q = (std::popcount(m.odd) & 1) ? Parity::Odd : Parity::Even;
        if (q != p) return false;
    }
    return true;
}

int SuperPolynomial::weighted_degree_of(const Monomial& m) const {
    int w = 0;
    for (int s = 0; s < table_->even_count(); ++s)
        if (m.even[s]) w += m.even[s] * table_->var(table_->even_slot_to_index(s)).weight;
    uint64_t mask = m.odd;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        w += table_->var(table_->odd_bit_to_index(b)).weight;
    }
    return w;
}

std::vector<std::pair<int, SuperPolynomial>> SuperPolynomial::weighted_split() const {
    std::map<int, SuperPolynomial> parts;
    for (const auto& [m, c] : terms_) {
        int w = weighted_degree_of(m);
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, SuperPolynomial(table_)).first;
        it->second.add_term(m, c);
    }
    std::vector<std::pair<int, SuperPolynomial>> r;
    for (auto& [w, p] : parts) r.emplace_back(w, std::move(p));
    return r;
}

bool SuperPolynomial::weighted_homogeneous(int w) const {
    for (const auto& [m, c] : terms_)
        if (weighted_degree_of(m) != w) return false;
    return true;
}

int SuperPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = std::popcount(m.odd);
        for (auto e : m.even) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::string SuperPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        } else if (a.sign() < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        for (int s = 0; s < table_->even_count(); ++s) {
            if (!m.even[s]) continue;
            const auto& v = table_->var(table_->even_slot_to_index(s));
            factors.push_back(m.even[s] == 1 ? v.name : v.name + "^" + std::to_string(m.even[s]));
        }
        uint64_t mask = m.odd;
        while (mask) {
            int b = std::countr_zero(mask);
            mask &= mask - 1;
            factors.push_back(table_->var(table_->odd_bit_to_index(b)).name);
        }
        if (factors.empty()) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

}  // namespace sg
