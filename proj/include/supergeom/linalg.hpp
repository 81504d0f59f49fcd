#ifndef SUPERGEOM_LINALG_HPP
#define SUPERGEOM_LINALG_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "supergeom/rational.hpp"

namespace sg {

// Sparse vector over an abstract int64 index space, entries sorted by index.
struct SVec {
    std::vector<std::pair<int64_t, Rational>> e;

    bool is_zero() const { return e.empty(); }
    void add(int64_t i, const Rational& c);
    // this += c * o
    void axpy(const Rational& c, const SVec& o);
    void scale(const Rational& c);
    // divide by gcd of numerators, multiply by lcm of denominators (keeps
    // entries integral and small; a positive unit rescaling)
    void normalize_content();
    int64_t lead() const { return e.front().first; }
    const Rational& lead_coeff() const { return e.front().second; }
};

// Incremental echelonized span with combination tracking: supports rank
// queries, membership tests and exact expression of a vector in terms of the
// inserted generators.
class LinearSpan {
public:
    // Returns true if v enlarged the span. Records v's combination either way.
    bool insert(const SVec& v);
    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return n_inserted_; }
    bool contains(const SVec& v) const;
    // Coefficients x with v = sum x_i * inserted_i, if v lies in the span.
    std::optional<std::vector<Rational>> express(const SVec& v) const;

private:
    std::vector<SVec> rows_;
    std::vector<std::vector<Rational>> combos_;  // rows_[j] = sum combos_[j][i] * inserted_i
    std::unordered_map<int64_t, int> lead_to_row_;
    int n_inserted_ = 0;

    void reduce(SVec& v, std::vector<Rational>* combo) const;
};

// Linear system  A x = 0  over unknowns 0..n-1, built row by row; computes
// rank and an exact kernel basis by sparse fraction-normalized elimination.
class EqSystem {
public:
    explicit EqSystem(int n_unknowns) : n_(n_unknowns) {}

    void add_equation(SVec eq);  // indices must lie in [0, n)
    int rank() const { return static_cast<int>(rows_.size()); }
    int unknowns() const { return n_; }
    // Basis of the solution space, as dense length-n vectors.
    std::vector<std::vector<Rational>> kernel_basis() const;

private:
    int n_;
    std::vector<SVec> rows_;
    std::unordered_map<int64_t, int> lead_to_row_;
};

// Rank of a dense rational matrix (small helper for quotient bookkeeping).
int dense_rank(std::vector<std::vector<Rational>> m);

}  // namespace sg

#endif
