#pragma once

// Exponent vectors: a positive rational maps to the integer vector of prime
// exponents in its factorization. Multiplicative questions (is z a power of
// r? do these elements sit on one geometric progression?) become lattice
// geometry in Z^j, which we can answer exactly.

#include "sumprod/numeric.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

namespace sumprod {

// prime -> exponent, nonzero entries only; empty map is the rational 1.
using ExponentVector = std::map<Int, long>;

// Trial division; fine at desk scale (values up to ~10^12).
inline ExponentVector factor_int(Int n) {
    if (n < 1) throw std::invalid_argument("factor_int requires n >= 1");
    ExponentVector f;
    auto strip = [&](const Int& p) {
        long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) f[p] = e;
    };
    strip(Int(2));
    strip(Int(3));
    for (Int d = 5; d * d <= n; d += 2) strip(d);
    if (n > 1) f[n] += 1;
    return f;
}

inline ExponentVector factor_rat(const Rat& q) {
    if (q <= 0) throw std::invalid_argument("factor_rat requires q > 0");
    ExponentVector f = factor_int(q.get_num());
    for (const auto& [p, e] : factor_int(q.get_den())) {
        long& slot = f[p];
        slot -= e;
        if (slot == 0) f.erase(p);
    }
    return f;
}

inline Rat exvec_value(const ExponentVector& v) {
    Rat r(1);
    for (const auto& [p, e] : v) r *= rat_pow(Rat(p), e);
    return r;
}

// u == t * base for an integer t (base nonzero). t = 0 only matches u == 0.
inline std::optional<long> exvec_multiple_of(const ExponentVector& u, const ExponentVector& base) {
    if (base.empty()) return std::nullopt;
    if (u.empty()) return 0;
    if (u.size() != base.size()) return std::nullopt;
    long t = 0;
    auto iu = u.begin();
    auto ib = base.begin();
    for (; iu != u.end(); ++iu, ++ib) {
        if (iu->first != ib->first) return std::nullopt;
        if (iu->second % ib->second != 0) return std::nullopt;
        long q = iu->second / ib->second;
        if (t == 0)
            t = q;
        else if (q != t)
            return std::nullopt;
    }
    return t;
}

// Smallest vector in the same direction: u / gcd(|entries|).
inline ExponentVector exvec_primitive(const ExponentVector& u) {
    if (u.empty()) throw std::invalid_argument("primitive of zero vector");
    Int g = 0;
    for (const auto& [p, e] : u) g = int_gcd(g, Int(std::abs(e)));
    long gl = to_long(g);
    ExponentVector out;
    for (const auto& [p, e] : u) out[p] = e / gl;
    return out;
}

// t with z == r^t, if one exists (t may be zero or negative).
inline std::optional<long> power_index_of(const Rat& z, const Rat& r) {
    if (z <= 0 || r <= 0 || r == 1) throw std::invalid_argument("power_index_of requires z > 0, r > 0, r != 1");
    return exvec_multiple_of(factor_rat(z), factor_rat(r));
}

inline bool is_rational_power_of(const Rat& z, const Rat& r) {
    return power_index_of(z, r).has_value();
}

} // namespace sumprod
