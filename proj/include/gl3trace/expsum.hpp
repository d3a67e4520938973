#pragma once

// Exact arithmetic of additive characters: Kloosterman sums S(a,b;c),
// Ramanujan sums S(0,a;c), and the two sides of the character-sum identity
//
//   sum_{0<=d<c,(d,c)=1} e(d/c) S(md, n2; mc/n1)
//     = sum_{u ubar = 1 mod mc/n1} S(0, 1+u n1; c) e(n2 ubar / (mc/n1)),
//
// all as finite sums of unit complex numbers with compensated accumulation.
// Conventions: c = 1 sums equal 1 (the unit group is the trivial class),
// negative arguments are reduced mod c first.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "gl3trace/common.hpp"

namespace gl3trace {

using std::int64_t;

struct Residue {
    int64_t value = 0;
    int64_t modulus = 1;
};

struct ExpSumValue {
    double re = 0.0;
    double im = 0.0;
    int64_t exact_terms = 0;
    cplx value() const { return {re, im}; }
};

inline int64_t mod_reduce(int64_t a, int64_t c) {
    int64_t r = a % c;
    return r < 0 ? r + c : r;
}

// d dbar = 1 (mod c); modulus 1 returns the trivial class 0.
inline int64_t mod_inverse(int64_t d, int64_t c) {
    if (c < 1) throw NotInvertible("mod_inverse: modulus must be positive");
    if (c == 1) return 0;
    int64_t r0 = c, r1 = mod_reduce(d, c);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw NotInvertible("mod_inverse: gcd(d, c) != 1");
    return mod_reduce(t0, c);
}

inline Residue mod_inverse_res(int64_t d, int64_t c) {
    return {mod_inverse(d, c), c};
}

// S(a, b; c) = sum_{d dbar = 1 mod c} e((d a + dbar b)/c)
inline ExpSumValue kloosterman(int64_t a, int64_t b, int64_t c) {
    if (c < 1) throw DomainError("kloosterman: c >= 1 required");
    if (c > kMaxExpSumTerms)
        throw DomainError("kloosterman: modulus exceeds summand cap");
    if (c == 1) return {1.0, 0.0, 1};
    a = mod_reduce(a, c);
    b = mod_reduce(b, c);
    KahanSumC sum;
    int64_t terms = 0;
    for (int64_t d = 1; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        int64_t dbar = mod_inverse(d, c);
        sum.add(e_of(static_cast<double>(mod_reduce(d * a + dbar * b, c)) / c));
        ++terms;
    }
    cplx v = sum.value();
    return {v.real(), v.imag(), terms};
}

// S(0, a; c) = sum_{(v,c)=1} e(a v / c), integer valued.
inline int64_t ramanujan(int64_t a, int64_t c) {
    if (c < 1) throw DomainError("ramanujan: c >= 1 required");
    if (c == 1) return 1;
    a = mod_reduce(a, c);
    KahanSum sum;
    for (int64_t v = 1; v < c; ++v) {
        if (std::gcd(v, c) != 1) continue;
        sum.add(std::cos(TWO_PI * static_cast<double>(mod_reduce(a * v, c)) / c));
    }
    return static_cast<int64_t>(std::llround(sum.value()));
}

inline int64_t moebius(int64_t n) {
    int64_t mu = 1;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Moebius-divisor evaluation sum_{d | (a,c)} mu(c/d) d, the cross-check
// route for the character sum above.
inline int64_t ramanujan_moebius(int64_t a, int64_t c) {
    if (c < 1) throw DomainError("ramanujan: c >= 1 required");
    int64_t g = std::gcd(mod_reduce(a, c), c);  // gcd(0, c) = c
    int64_t out = 0;
    for (int64_t d = 1; d <= g; ++d)
        if (g % d == 0) out += moebius(c / d) * d;
    return out;
}

inline int64_t divisor_count(int64_t n) {
    int64_t cnt = 0;
    for (int64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) cnt += (d * d == n) ? 1 : 2;
    return cnt;
}

// |S(n,1;c)| / (d(c) sqrt(c) sqrt(gcd(n,c))), the Weil-bound ratio; stays
// <= 1 on every tested input.
inline double weil_ratio(int64_t n, int64_t c) {
    ExpSumValue s = kloosterman(n, 1, c);
    double g = static_cast<double>(std::gcd(mod_reduce(n, c), c));
    return std::abs(s.value()) /
           (static_cast<double>(divisor_count(c)) * std::sqrt(static_cast<double>(c)) * std::sqrt(g));
}

// Both sides of the character-sum identity; requires n1 | c m.
inline std::pair<ExpSumValue, ExpSumValue> char_identity_sides(int64_t m, int64_t n1,
                                                               int64_t n2, int64_t c) {
    if (m < 1 || n1 < 1 || n2 < 1 || c < 1)
        throw DomainError("char_identity_sides: positive arguments required");
    if ((c * m) % n1 != 0)
        throw DivisibilityViolation("char_identity_sides: n1 must divide c m");
    const int64_t q = c * m / n1;

    KahanSumC lhs;
    int64_t lhs_terms = 0;
    for (int64_t d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1 && c > 1) continue;
        if (c == 1 && d != 0) continue;
        ExpSumValue s = kloosterman(m * d, n2, q);
        lhs.add(e_of(static_cast<double>(d) / c) * s.value());
        lhs_terms += s.exact_terms;
    }

    KahanSumC rhs;
    int64_t rhs_terms = 0;
    if (q == 1) {
        // single trivial class u = 0, ubar = 0
        rhs.add(cplx(static_cast<double>(ramanujan(1, c)), 0.0));
        ++rhs_terms;
    } else {
        for (int64_t u = 1; u < q; ++u) {
            if (std::gcd(u, q) != 1) continue;
            int64_t ubar = mod_inverse(u, q);
            double rs = static_cast<double>(ramanujan(1 + u * n1, c));
            rhs.add(rs * e_of(static_cast<double>(mod_reduce(n2 * ubar, q)) / q));
            ++rhs_terms;
        }
    }

    cplx lv = lhs.value(), rv = rhs.value();
    return {{lv.real(), lv.imag(), lhs_terms}, {rv.real(), rv.imag(), rhs_terms}};
}

}  // namespace gl3trace
