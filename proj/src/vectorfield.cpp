#include "supergeom/vectorfield.hpp"

#include <sstream>

namespace sg {

bool SuperVectorField::is_zero() const {
    for (const auto& [c, p] : coeffs_)
        if (!p.is_zero()) return false;
    return true;
}

void SuperVectorField::set_coeff(int coord, SuperPolynomial p) {
    if (p.is_zero())
        coeffs_.erase(coord);
    else
        coeffs_[coord] = std::move(p);
}

void SuperVectorField::set_coeff(const std::string& coord, const SuperPolynomial& p) {
    set_coeff(chart_->require(coord), p);
}

SuperPolynomial SuperVectorField::coeff(int coord) const {
    auto it = coeffs_.find(coord);
    return it == coeffs_.end() ? SuperPolynomial(chart_) : it->second;
}

bool SuperVectorField::parity_consistent() const {
    for (const auto& [c, p] : coeffs_) {
        if (p.is_zero()) continue;
        Parity want = parity_ + chart_->var(c).parity;
        if (!p.parity_homogeneous(want)) return false;
    }
    return true;
}

SuperPolynomial SuperVectorField::apply(const SuperPolynomial& f) const {
    SuperPolynomial r(chart_);
    for (const auto& [c, a] : coeffs_) r += a * f.partial_left(c);
    return r;
}

SuperVectorField SuperVectorField::operator+(const SuperVectorField& o) const {
    SuperVectorField r(chart_, parity_);
    r.coeffs_ = coeffs_;
    for (const auto& [c, p] : o.coeffs_) {
        auto it = r.coeffs_.find(c);
        if (it == r.coeffs_.end())
            r.coeffs_[c] = p;
        else {
            it->second += p;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

SuperVectorField SuperVectorField::operator-() const {
    SuperVectorField r(chart_, parity_);
    for (const auto& [c, p] : coeffs_) r.coeffs_[c] = -p;
    return r;
}

SuperVectorField SuperVectorField::lmul(const SuperPolynomial& f) const {
    auto fp = f.parity();
    Parity shift = (fp && *fp == Parity::Odd) ? Parity::Odd : Parity::Even;
    SuperVectorField r(chart_, parity_ + shift);
    for (const auto& [c, p] : coeffs_) {
        SuperPolynomial q = f * p;
        if (!q.is_zero()) r.coeffs_[c] = std::move(q);
    }
    return r;
}

SuperVectorField SuperVectorField::scale(const Rational& c) const {
    SuperVectorField r(chart_, parity_);
    if (c.is_zero()) return r;
    for (const auto& [k, p] : coeffs_) r.coeffs_[k] = p * c;
    return r;
}

std::string SuperVectorField::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.to_string() << ")*d_" << chart_->var(c).name;
    }
    return os.str();
}

SuperVectorField lie_bracket(const SuperVectorField& X, const SuperVectorField& Y) {
    if (X.chart().get() != Y.chart().get())
        throw std::invalid_argument("lie_bracket: chart mismatch");
    int sgn = (pint(X.parity()) & pint(Y.parity())) ? -1 : 1;
    SuperVectorField r(X.chart(), X.parity() + Y.parity());
    // coefficient of d_c: X(Y(c)) - (-1)^{|X||Y|} Y(X(c))
    for (const auto& [c, b] : Y.coeffs()) {
        SuperPolynomial t = X.apply(b);
        if (!t.is_zero()) r.set_coeff(c, r.coeff(c) + t);
    }
    for (const auto& [c, a] : X.coeffs()) {
        SuperPolynomial t = Y.apply(a);
        if (t.is_zero()) continue;
        if (sgn < 0)
            r.set_coeff(c, r.coeff(c) + t);
        else
            r.set_coeff(c, r.coeff(c) - t);
    }
    return r;
}

void SuperOneForm::set_coeff(int coord, SuperPolynomial p) {
    if (p.is_zero())
        coeffs_.erase(coord);
    else
        coeffs_[coord] = std::move(p);
}

void SuperOneForm::set_coeff(const std::string& coord, const SuperPolynomial& p) {
    set_coeff(chart_->require(coord), p);
}

SuperPolynomial SuperOneForm::coeff(int coord) const {
    auto it = coeffs_.find(coord);
    return it == coeffs_.end() ? SuperPolynomial(chart_) : it->second;
}

std::string SuperOneForm::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(d" << chart_->var(c).name << ")*(" << p.to_string() << ")";
    }
    return os.str();
}

SuperPolynomial insert(const SuperVectorField& X, const SuperOneForm& sigma) {
    if (X.chart().get() != sigma.chart().get())
        throw std::invalid_argument("insert: chart mismatch");
    SuperPolynomial r(X.chart());
    for (const auto& [c, a] : X.coeffs()) {
        auto it = sigma.coeffs().find(c);
        if (it != sigma.coeffs().end()) r += a * it->second;
    }
    return r;
}

SuperPolynomial lie_derivative_eval(const SuperVectorField& X, const SuperOneForm& sigma,
                                    const SuperVectorField& V) {
    SuperPolynomial t = X.apply(insert(V, sigma));
    SuperPolynomial u = insert(lie_bracket(X, V), sigma);
    int s = (pint(X.parity()) & pint(sigma.parity())) ? -1 : 1;
    return s < 0 ? t + u : t - u;
}

SuperPolynomial lie_derivative_eval_cartan(const SuperVectorField& X, const SuperOneForm& sigma,
                                           const SuperVectorField& V) {
    // d(iota_X sigma)(V) = (-1)^{|iota_X sigma||V|} V(iota_X sigma)
    SuperPolynomial f = insert(X, sigma);
    int pf = (pint(X.parity()) + pint(sigma.parity())) & 1;
    SuperPolynomial a = V.apply(f);
    if (pf & pint(V.parity())) a = -a;
    // (iota_X d sigma)(V) = dsigma(X, V) with CE signs:
    //   (-1)^{|X||sigma|} X(sigma(V)) - (-1)^{|V|(|X|+|sigma|)} V(sigma(X)) - sigma([X,V])
    SuperPolynomial b = X.apply(insert(V, sigma));
    if (pint(X.parity()) & pint(sigma.parity())) b = -b;
    SuperPolynomial c = V.apply(f);
    if (pint(V.parity()) & ((pint(X.parity()) + pint(sigma.parity())) & 1)) c = -c;
    SuperPolynomial d = insert(lie_bracket(X, V), sigma);
    return a + b - c - d;
}

}  // namespace sg
