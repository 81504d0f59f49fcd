#ifndef SUPERGEOM_VECTORFIELD_HPP
#define SUPERGEOM_VECTORFIELD_HPP

#include <map>

#include "supergeom/superpoly.hpp"

namespace sg {

// Graded derivation on a coordinate superdomain, X = sum a_c d/dc with the
// coefficient a_c written on the left. For a parity-homogeneous field the
// coefficient of an even coordinate carries the field's parity and the
// coefficient of an odd coordinate the opposite one.
class SuperVectorField {
public:
    SuperVectorField() = default;
    SuperVectorField(TablePtr chart, Parity parity)
        : chart_(std::move(chart)), parity_(parity) {}

    const TablePtr& chart() const { return chart_; }
    Parity parity() const { return parity_; }
    bool is_zero() const;

    void set_coeff(int coord, SuperPolynomial p);
    void set_coeff(const std::string& coord, const SuperPolynomial& p);
    SuperPolynomial coeff(int coord) const;
    const std::map<int, SuperPolynomial>& coeffs() const { return coeffs_; }

    // check the parity invariant on all stored coefficients
    bool parity_consistent() const;

    // X(f) = sum a_c * partial_left_c(f)
    SuperPolynomial apply(const SuperPolynomial& f) const;

    SuperVectorField operator+(const SuperVectorField& o) const;
    SuperVectorField operator-() const;
    // left multiplication by a function (parity of the result shifts by |f|)
    SuperVectorField lmul(const SuperPolynomial& f) const;
    SuperVectorField scale(const Rational& c) const;

    std::string to_string() const;

private:
    TablePtr chart_;
    Parity parity_ = Parity::Even;
    std::map<int, SuperPolynomial> coeffs_;
};

// [X,Y] = X o Y - (-1)^{|X||Y|} Y o X, computed on coordinate functions.
SuperVectorField lie_bracket(const SuperVectorField& X, const SuperVectorField& Y);

// One-form written as sum (dc) * b_c with the coefficient function on the right.
class SuperOneForm {
public:
    SuperOneForm() = default;
    SuperOneForm(TablePtr chart, Parity parity)
        : chart_(std::move(chart)), parity_(parity) {}

    const TablePtr& chart() const { return chart_; }
    Parity parity() const { return parity_; }

    void set_coeff(int coord, SuperPolynomial p);
    void set_coeff(const std::string& coord, const SuperPolynomial& p);
    SuperPolynomial coeff(int coord) const;
    const std::map<int, SuperPolynomial>& coeffs() const { return coeffs_; }

    std::string to_string() const;

private:
    TablePtr chart_;
    Parity parity_ = Parity::Even;
    std::map<int, SuperPolynomial> coeffs_;
};

// Left insertion: iota_X sigma = sum a_c * b_c.
SuperPolynomial insert(const SuperVectorField& X, const SuperOneForm& sigma);

// (L_X sigma)(V) via the Leibniz rule:
//   X(sigma(V)) - (-1)^{|X||sigma|} sigma([X,V]).
SuperPolynomial lie_derivative_eval(const SuperVectorField& X, const SuperOneForm& sigma,
                                    const SuperVectorField& V);

// The same value computed through the Cartan route d(iota_X sigma) + iota_X d sigma,
// with d-evaluations carrying Chevalley-Eilenberg sign conventions. Equals the
// Leibniz route up to the global sign (-1)^{|X||sigma|}.
SuperPolynomial lie_derivative_eval_cartan(const SuperVectorField& X, const SuperOneForm& sigma,
                                           const SuperVectorField& V);

}  // namespace sg

#endif
