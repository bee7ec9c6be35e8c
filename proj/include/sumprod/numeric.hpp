#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and canonical
// rationals from GMP, plus the handful of helpers (gcd of rationals, integer
// powers, p/q parsing) the rest of the library leans on. Everything here is
// exact; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sumprod {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// num/den as a canonical rational; den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(num);
    q /= Rat(den);
    return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// r^e for any integer e; r must be nonzero when e < 0.
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num = int_pow(r.get_num(), mag);
    Int den = int_pow(r.get_den(), mag);
    if (e < 0) {
        if (num == 0) throw std::domain_error("zero base with negative exponent");
        std::swap(num, den);
    }
    return make_rat(num, den);
}

// Positive gcd for rationals: the largest d with a/d and b/d integral.
// gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2).
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    Int num = int_gcd(a.get_num() * b.get_den(), b.get_num() * a.get_den());
    Int den = a.get_den() * b.get_den();
    Rat g = make_rat(num, den);
    if (g < 0) g = -g;
    return g;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Strict "p" or "p/q" parser for CLI rationals; decimals are rejected so
// every input stays exact.
inline Rat parse_rat(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("expected rational \"p\" or \"p/q\", got \"" + text + "\""); };
    if (text.empty()) bad();
    auto digits = [&](std::string_view s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    std::string_view sv(text);
    bool neg = false;
    if (sv.front() == '-') {
        neg = true;
        sv.remove_prefix(1);
    }
    auto slash = sv.find('/');
    std::string_view num = sv.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : sv.substr(slash + 1);
    if (!digits(num) || !digits(den)) bad();
    Rat q = make_rat(Int(std::string(num)), Int(std::string(den)));
    return neg ? Rat(-q) : q;
}

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in long");
    return v.get_si();
}

// Exact integer quotient of two rationals; throws unless b divides a.
inline long rat_exact_quotient(const Rat& a, const Rat& b) {
    Rat q = a / b;
    if (!rat_is_integer(q)) throw std::domain_error("quotient is not an integer");
    return to_long(q.get_num());
}

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace sumprod
