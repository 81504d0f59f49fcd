#include "supergeom/contact.hpp"

namespace sg {

JetCalculus::JetCalculus(TablePtr j1, std::vector<std::string> xs, std::vector<std::string> us)
    : j1_(std::move(j1)), xs_(std::move(xs)), us_(std::move(us)) {
    if (xs_.size() != us_.size()) throw std::invalid_argument("JetCalculus: |xs| != |us|");
    for (const auto& nm : xs_) xi_.push_back(j1_->require(nm));
    for (const auto& nm : us_) ui_.push_back(j1_->require(nm));
    u_j1_ = j1_->require("u");
    for (size_t i = 0; i < xs_.size(); ++i) {
        if (j1_->var(xi_[i]).parity != j1_->var(ui_[i]).parity)
            throw std::invalid_argument("JetCalculus: x^i and u_i must share parity");
    }
    // extended chart: all J1 variables followed by the second-jet representatives
    std::vector<std::tuple<std::string, Parity, int>> vars;
    for (int i = 0; i < j1_->size(); ++i) {
        const auto& v = j1_->var(i);
        vars.emplace_back(v.name, v.parity, v.weight);
    }
    int n = static_cast<int>(xs_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Parity pi = j1_->var(xi_[i]).parity, pj = j1_->var(xi_[j]).parity;
            if (i == j && pi == Parity::Odd) continue;  // u_{ii} = 0 for odd i
            std::string nm = "u_" + xs_[i] + xs_[j];
            int wt = j1_->var(ui_[j]).weight - j1_->var(xi_[i]).weight;
            vars.emplace_back(nm, pi + pj, wt);
        }
    }
    j2_ = VariableTable::make(std::move(vars));
    for (const auto& nm : xs_) xi2_.push_back(j2_->require(nm));
    for (const auto& nm : us_) ui2_.push_back(j2_->require(nm));
    u_j2_ = j2_->require("u");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && j1_->var(xi_[i]).parity == Parity::Odd) continue;
            jet2_[{i, j}] = j2_->require("u_" + xs_[i] + xs_[j]);
        }
}

Parity JetCalculus::index_parity(int i) const { return j1_->var(xi_[i]).parity; }

std::string JetCalculus::jet2_name(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == j && index_parity(i) == Parity::Odd) return "";
    return "u_" + xs_[i] + xs_[j];
}

SuperPolynomial JetCalculus::u2(int i, int j) const {
    bool swapped = false;
    if (i > j) {
        std::swap(i, j);
        swapped = true;
    }
    if (i == j && index_parity(i) == Parity::Odd) return SuperPolynomial(j2_);
    SuperPolynomial p = SuperPolynomial::variable(j2_, jet2_.at({i, j}));
    if (swapped && index_parity(i) == Parity::Odd && index_parity(j) == Parity::Odd) return -p;
    return p;
}

SuperVectorField JetCalculus::D(int i) const {
    SuperVectorField X(j1_, index_parity(i));
    X.set_coeff(xi_[i], SuperPolynomial::constant(j1_, Rational(1)));
    X.set_coeff(u_j1_, SuperPolynomial::variable(j1_, ui_[i]));
    return X;
}

SuperVectorField JetCalculus::Dtilde(int i) const {
    SuperVectorField X(j2_, index_parity(i));
    X.set_coeff(xi2_[i], SuperPolynomial::constant(j2_, Rational(1)));
    X.set_coeff(u_j2_, SuperPolynomial::variable(j2_, ui2_[i]));
    for (int j = 0; j < n(); ++j) X.set_coeff(ui2_[j], u2(i, j));
    return X;
}

SuperOneForm JetCalculus::sigma() const {
    SuperOneForm s(j1_, Parity::Even);
    s.set_coeff(u_j1_, SuperPolynomial::constant(j1_, Rational(1)));
    for (int i = 0; i < n(); ++i)
        s.set_coeff(xi_[i], -SuperPolynomial::variable(j1_, ui_[i]));
    return s;
}

SuperOneForm JetCalculus::sigma_j2() const {
    SuperOneForm s(j2_, Parity::Even);
    s.set_coeff(u_j2_, SuperPolynomial::constant(j2_, Rational(1)));
    for (int i = 0; i < n(); ++i)
        s.set_coeff(xi2_[i], -SuperPolynomial::variable(j2_, ui2_[i]));
    return s;
}

SuperOneForm JetCalculus::sigma_k(int k) const {
    SuperOneForm s(j2_, index_parity(k));
    s.set_coeff(ui2_[k], SuperPolynomial::constant(j2_, Rational(1)));
    for (int i = 0; i < n(); ++i) {
        SuperPolynomial uik = u2(i, k);
        if (!uik.is_zero()) s.set_coeff(xi2_[i], -uik);
    }
    return s;
}

SuperVectorField JetCalculus::contact_field(const SuperPolynomial& f) const {
    auto pf = f.parity();
    if (!pf && !f.is_zero())
        throw std::invalid_argument("contact_field: f must be parity-homogeneous");
    Parity parf = pf.value_or(Parity::Even);
    SuperVectorField S(j1_, parf);
    // f d_u
    S.set_coeff(u_j1_, f);
    for (int i = 0; i < n(); ++i) {
        int pi = pint(index_parity(i));
        // - (-1)^{|i|(|f|+1)} (d_{u_i} f) D_i
        SuperPolynomial dfi = f.partial_left(ui_[i]);
        if (!dfi.is_zero()) {
            int s = (pi & ((pint(parf) + 1) & 1)) ? -1 : 1;
            SuperVectorField term = D(i).lmul(dfi);
            for (const auto& [c, p] : term.coeffs()) {
                SuperPolynomial cur = S.coeff(c);
                S.set_coeff(c, s < 0 ? cur + p : cur - p);
            }
        }
        // + (-1)^{|i||f|} (D_i f) d_{u_i}
        SuperPolynomial Dif = D(i).apply(f);
        if (!Dif.is_zero()) {
            int s = (pi & pint(parf)) ? -1 : 1;
            SuperPolynomial cur = S.coeff(ui_[i]);
            S.set_coeff(ui_[i], s < 0 ? cur - Dif : cur + Dif);
        }
    }
    return S;
}

SuperPolynomial JetCalculus::lagrange_bracket(const SuperPolynomial& f,
                                              const SuperPolynomial& g) const {
    auto pf = f.parity(), pg = g.parity();
    Parity parf = pf.value_or(Parity::Even), parg = pg.value_or(Parity::Even);
    // f d_u g - (-1)^{|f||g|} g d_u f
    SuperPolynomial r = f * g.partial_left(u_j1_);
    {
        SuperPolynomial t = g * f.partial_left(u_j1_);
        if (pint(parf) & pint(parg))
            r += t;
        else
            r -= t;
    }
    for (int i = 0; i < n(); ++i) {
        int pi = pint(index_parity(i));
        // + (-1)^{|i||f|} (D_i f) (d_{u_i} g)
        {
            SuperPolynomial t = D(i).apply(f) * g.partial_left(ui_[i]);
            if (pi & pint(parf))
                r -= t;
            else
                r += t;
        }
        // - (-1)^{|g|(|f|+|i|)} (D_i g) (d_{u_i} f)
        {
            SuperPolynomial t = D(i).apply(g) * f.partial_left(ui_[i]);
            if (pint(parg) & ((pint(parf) + pi) & 1))
                r += t;
            else
                r -= t;
        }
    }
    return r;
}

SuperVectorField JetCalculus::prolong(const SuperPolynomial& f) const {
    auto pf = f.parity();
    Parity parf = pf.value_or(Parity::Even);
    SuperPolynomial f2 = f.transport(j2_);
    SuperVectorField S1 = contact_field(f);
    SuperVectorField S(j2_, parf);
    for (const auto& [c, p] : S1.coeffs())
        S.set_coeff(j2_->require(j1_->var(c).name), p.transport(j2_));
    for (int i = 0; i < n(); ++i) {
        for (int j = i; j < n(); ++j) {
            if (i == j && index_parity(i) == Parity::Odd) continue;
            // h_{ij} = (-1)^{(|i|+|j|)|f|} D~_i D~_j f
            SuperPolynomial h = Dtilde(i).apply(Dtilde(j).apply(f2));
            int s = (((pint(index_parity(i)) + pint(index_parity(j))) & 1) & pint(parf)) ? -1 : 1;
            if (s < 0) h = -h;
            S.set_coeff(jet2_.at({i, j}), h);
        }
    }
    return S;
}

bool JetCalculus::tangency_check(const SuperPolynomial& f,
                                 const std::vector<SuperPolynomial>& relations,
                                 const std::map<int, SuperPolynomial>& solved,
                                 std::string* witness) const {
    // relations must vanish on the equation locus
    for (const auto& E : relations) {
        if (!E.substitute(solved).is_zero())
            throw std::invalid_argument("tangency_check: relations are not solved by `solved`");
    }
    SuperVectorField S = prolong(f);
    for (size_t k = 0; k < relations.size(); ++k) {
        SuperPolynomial r = S.apply(relations[k]).substitute(solved);
        if (!r.is_zero()) {
            if (witness)
                *witness = "S~_f(E_" + std::to_string(k) + ") = " + r.to_string() +
                           " on the equation";
            return false;
        }
    }
    return true;
}

}  // namespace sg
