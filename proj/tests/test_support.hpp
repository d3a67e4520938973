#pragma once

// Test-only oracles, independent of the library's evaluation paths:
// brute-force exponential sums, ascending Bessel series, Euler-Maclaurin
// zeta, dense-grid Riemann quadrature.

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "gl3trace/common.hpp"
#include "gl3trace/special.hpp"

namespace oracle {

using gl3trace::cplx;
using gl3trace::PI;
using gl3trace::TWO_PI;

// Kloosterman sum, straight double loop, no inverse table reuse.
inline cplx kloosterman_brute(long long a, long long b, long long c) {
    if (c == 1) return {1.0, 0.0};
    cplx s{0.0, 0.0};
    for (long long d = 1; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long long dbar = 0;
        for (long long e = 1; e < c; ++e)
            if ((d * e) % c == 1) { dbar = e; break; }
        double arg = TWO_PI * static_cast<double>(((a * d + b * dbar) % c + c) % c) / c;
        s += cplx(std::cos(arg), std::sin(arg));
    }
    return s;
}

// Ascending series J_nu, complex order, log-space terms.
inline cplx bessel_j_series(cplx nu, double x, int terms = 200) {
    cplx sum{0.0, 0.0};
    for (int j = 0; j < terms; ++j) {
        cplx lg = gl3trace::log_gamma(nu + static_cast<double>(j) + 1.0);
        cplx lt = (nu + 2.0 * j) * std::log(x / 2.0) - std::lgamma(j + 1.0) - lg;
        cplx term = std::exp(lt);
        if (j % 2 == 1) term = -term;
        sum += term;
        if (j > 8 && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
    }
    return sum;
}

// I_nu ascending series.
inline cplx bessel_i_series(cplx nu, double x, int terms = 300) {
    cplx sum{0.0, 0.0};
    for (int j = 0; j < terms; ++j) {
        cplx lg = gl3trace::log_gamma(nu + static_cast<double>(j) + 1.0);
        cplx lt = (nu + 2.0 * j) * std::log(x / 2.0) - std::lgamma(j + 1.0) - lg;
        sum += std::exp(lt);
    }
    return sum;
}

// K_0-type check through the e^{-x cosh u} representation with plain
// Riemann sampling (deliberately naive; tanh-sinh style node crowding).
inline double bessel_k_tanh_sinh(double t, double x) {
    // u = sinh(w) substitution concentrates nodes near 0.
    const int n = 40000;
    const double wmax = std::asinh(std::acosh(1.0 + 745.0 / x));
    double h = wmax / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        double w = i * h;
        double u = std::sinh(w);
        double jac = std::cosh(w);
        double f = std::exp(-x * std::cosh(u)) * std::cos(2.0 * t * u) * jac;
        s += (i == 0 || i == n) ? 0.5 * f : f;
    }
    return s * h;
}

// Euler-Maclaurin zeta, independent of the Borwein path.
inline cplx zeta_euler_maclaurin(cplx s, int N = 50) {
    cplx sum{0.0, 0.0};
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    cplx Ns = std::exp(-s * std::log(static_cast<double>(N)));
    sum += Ns * (0.5 + static_cast<double>(N) / (s - 1.0));
    // Bernoulli tail: B2=1/6, B4=-1/30, B6=1/42, B8=-1/30
    const double B[4] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    cplx fac = s;
    cplx Npow = Ns / static_cast<double>(N);
    double fact = 1.0;
    for (int k = 0; k < 4; ++k) {
        int j = 2 * (k + 1);
        fact *= (j - 1) * j;
        // falling product s(s+1)...(s+j-2) accumulated in fac
        sum += B[k] / fact * fac * Npow * static_cast<double>(N);
        fac *= (s + static_cast<double>(j - 1)) * (s + static_cast<double>(j));
        Npow /= static_cast<double>(N) * static_cast<double>(N);
    }
    return sum;
}

// Dense-grid Riemann evaluation of int_a^b amp(y) e(phase(y)) dy.
template <class A, class P>
cplx riemann_osc(A&& amp, P&& phase, double a, double b, long n) {
    cplx s{0.0, 0.0};
    double h = (b - a) / n;
    for (long i = 0; i < n; ++i) {
        double y = a + (i + 0.5) * h;
        s += amp(y) * gl3trace::e_of(phase(y));
    }
    return s * h;
}

}  // namespace oracle
