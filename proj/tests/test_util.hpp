#ifndef SG_TEST_UTIL_HPP
#define SG_TEST_UTIL_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

#include "supergeom/superpoly.hpp"

namespace sgt {

// Small deterministic RNG for property tests.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ULL) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// Random polynomial with small integer coefficients; if `parity` is set the
// result is parity-homogeneous (possibly zero).
inline sg::SuperPolynomial random_poly(const sg::TablePtr& t, Rng& rng, int terms, int maxdeg,
                                       std::optional<sg::Parity> parity = std::nullopt) {
    using namespace sg;
    SuperPolynomial p(t);
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        m.even.assign(t->even_count(), 0);
        int deg = rng.range(0, maxdeg);
        for (int d = 0; d < deg; ++d) {
            int i = rng.range(0, t->size() - 1);
            const auto& v = t->var(i);
            if (v.parity == Parity::Even)
                m.even[v.slot] = static_cast<uint16_t>(m.even[v.slot] + 1);
            else
                m.odd |= 1ULL << v.slot;
        }
        if (parity) {
            int par = 0;
            for (uint64_t x = m.odd; x; x &= x - 1) par ^= 1;
            if (par != sg::pint(*parity)) {
                // flip parity by toggling the first odd variable if possible
                bool fixed = false;
                for (int i = 0; i < t->size() && !fixed; ++i) {
                    const auto& v = t->var(i);
                    if (v.parity == Parity::Odd) {
                        m.odd ^= 1ULL << v.slot;
                        fixed = true;
                    }
                }
                if (!fixed) continue;  // no odd vars, cannot fix
            }
        }
        int c = rng.range(-4, 4);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    return p;
}

inline std::string data_root() {
    const char* p = std::getenv("SUPERGEOM_DATA");
    return p ? std::string(p) : std::string(".");
}

}  // namespace sgt

#endif
