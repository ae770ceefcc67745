#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qv/scalar.hpp"

namespace qv {

// Univariate polynomial over Q, coefficients lowest degree first.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Quotient of p by (x - root); requires root to be an exact root.
inline Poly poly_divide_linear(const Poly& p, const Rational& root) {
    Poly q(p.size() - 1, Rational(0));
    Rational carry(0);
    for (int i = poly_degree(p); i >= 1; --i) {
        carry = p[static_cast<size_t>(i)] + carry * root;
        q[static_cast<size_t>(i) - 1] = carry;
    }
    if (p[0] + carry * root != 0) throw Error("poly_divide_linear: not a root");
    return q;
}

namespace detail {
inline std::vector<Int> small_divisors(Int n, int cap = 4096) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (static_cast<int>(divs.size()) >= cap) break;
        if (n % d == 0) {
            divs.push_back(d);
            divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}
}  // namespace detail

// All rational roots of p with multiplicities, found by the rational root
// bound on the integer-scaled polynomial. Divisor enumeration is capped, so
// roots with huge numerators can be missed; callers treat the result as a
// best effort (a miss only means a decomposition step falls back to its
// "cannot split" diagnostic).
inline std::map<Rational, int> rational_roots(Poly p) {
    poly_trim(p);
    std::map<Rational, int> roots;
    if (p.size() <= 1) return roots;
    // factor out x^k
    while (!p.empty() && p[0] == 0) {
        roots[Rational(0)]++;
        p.erase(p.begin());
    }
    while (poly_degree(p) >= 1) {
        // scale to integer coefficients
        Int common_den = 1;
        for (const auto& c : p) common_den = lcm(common_den, denominator(c));
        std::vector<Int> ip;
        for (const auto& c : p) ip.push_back(numerator(c) * (common_den / denominator(c)));
        std::vector<Int> nums = detail::small_divisors(ip.front());
        std::vector<Int> dens = detail::small_divisors(ip.back());
        bool found = false;
        for (const Int& den : dens) {
            for (const Int& num : nums) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * num, den);
                    if (poly_eval(p, cand) == 0) {
                        roots[cand]++;
                        p = poly_divide_linear(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    return roots;
}

}  // namespace qv
