#pragma once

// Rational roots of integer polynomials: every root p/q in lowest terms has
// p | a_0 and q | a_k, so the candidates form a finite, exactly checkable
// list.

#include "sumprod/numeric.hpp"

#include <algorithm>
#include <vector>

namespace sumprod {

// Coefficients in ascending degree order; highest nonzero entry is the
// leading coefficient.
struct Polynomial {
    std::vector<Int> coefficients;

    long degree() const {
        for (std::size_t i = coefficients.size(); i-- > 0;)
            if (coefficients[i] != 0) return static_cast<long>(i);
        return -1;
    }
};

inline Rat eval_poly(const Polynomial& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.coefficients.size(); i-- > 0;) {
        acc *= x;
        acc += Rat(p.coefficients[i]);
    }
    return acc;
}

inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            divs.push_back(d);
            Int q = n / d;
            if (q != d) divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// All rational roots, in lowest terms, sorted ascending.
inline std::vector<Rat> rational_roots(const Polynomial& p) {
    long deg = p.degree();
    if (deg < 0) throw std::invalid_argument("zero polynomial");
    if (deg < 1) throw std::invalid_argument("degree must be at least 1");

    std::vector<Rat> roots;
    // Factor out x^v so the constant term is nonzero; x = 0 is then a root
    // exactly when v > 0.
    std::size_t v = 0;
    while (p.coefficients[v] == 0) ++v;
    if (v > 0) roots.emplace_back(0);
    std::vector<Int> reduced(p.coefficients.begin() + static_cast<long>(v), p.coefficients.begin() + deg + 1);

    if (reduced.size() >= 2) {
        Polynomial q{reduced};
        const Int& a0 = reduced.front();
        const Int& ak = reduced.back();
        for (const Int& m : positive_divisors(a0)) {
            for (const Int& n : positive_divisors(ak)) {
                if (int_gcd(m, n) != 1) continue;
                Rat cand = make_rat(m, n);
                if (eval_poly(q, cand) == 0) roots.push_back(cand);
                if (eval_poly(q, Rat(-cand)) == 0) roots.push_back(-cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace sumprod
