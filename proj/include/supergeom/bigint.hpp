#ifndef SUPERGEOM_BIGINT_HPP
#define SUPERGEOM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sg {

// Arbitrary-precision signed integer, magnitude stored as base-2^32 limbs
// (little-endian, no leading zero limb). Small values stay in one limb, so
// the common case allocates a single short vector.
class BigInt {
public:
    BigInt() : neg_(false) {}
    BigInt(long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    bool fits_longlong() const;
    long long to_longlong() const;  // valid only if fits_longlong()

    std::string to_string() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated division (C semantics): quotient rounds toward zero.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    size_t limb_count() const { return limbs_.size(); }

private:
    bool neg_;
    std::vector<uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace sg

#endif
