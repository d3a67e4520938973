#pragma once

// Adaptive oscillatory quadrature.
//
// Backbone: Gauss-Kronrod 15(7) panels.  Oscillatory integrals
// int a(y) e(phi(y)) dy are split at the stationary points of phi (located
// by bisection on sign changes of phi'), pre-partitioned so no panel spans
// more than half an oscillation of the local phase, then refined adaptively
// on the embedded error estimate.  Vertical-line (Mellin-Barnes) integrals
// march symmetric panels outward until the integrand has decayed.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <vector>

#include "gl3trace/common.hpp"

namespace gl3trace {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 18;
    double truncation_decay_threshold = 1e-14;
};

enum class QuadStatus { ok, max_depth_exceeded, no_decay_detected };

struct QuadResult {
    cplx value{0.0, 0.0};
    double abs_err_estimate = 0.0;
    int subdivisions = 1;
    int stationary_points_found = 0;
    QuadStatus status = QuadStatus::ok;
};

namespace detail {

// QUADPACK dqk15 nodes/weights (positive half; node 7 is the midpoint).
inline constexpr double kGK15X[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15W[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kG7W[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEval {
    cplx kronrod;
    double err;
    double abs_integral;  // int |f|, for decay detection
};

template <class F>
PanelEval gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx resk = fc * kGK15W[7];
    cplx resg = fc * kG7W[3];
    double resabs = std::abs(fc) * kGK15W[7];
    for (int j = 0; j < 7; ++j) {
        cplx f1 = f(c - h * kGK15X[j]);
        cplx f2 = f(c + h * kGK15X[j]);
        cplx fsum = f1 + f2;
        resk += fsum * kGK15W[j];
        resabs += (std::abs(f1) + std::abs(f2)) * kGK15W[j];
        if (j % 2 == 1) resg += fsum * kG7W[j / 2];
    }
    PanelEval out;
    out.kronrod = resk * h;
    out.abs_integral = resabs * std::abs(h);
    // QUADPACK-style rescaled error estimate
    double errraw = std::abs(resk - resg) * std::abs(h);
    double scale = out.abs_integral;
    if (scale > 0.0 && errraw > 0.0) {
        double r = std::pow(200.0 * errraw / scale, 1.5);
        out.err = scale * std::min(1.0, r);
    } else {
        out.err = errraw;
    }
    return out;
}

// Adaptive refinement on [a, b]: largest-error-first splitting.
template <class F>
QuadResult adaptive(F&& f, double a, double b, const QuadConfig& cfg,
                    int initial_splits = 1) {
    struct Seg {
        double a, b;
        PanelEval ev;
    };
    std::vector<Seg> segs;
    int nseg = std::max(1, initial_splits);
    segs.reserve(nseg + 64);
    for (int i = 0; i < nseg; ++i) {
        double sa = a + (b - a) * i / nseg;
        double sb = a + (b - a) * (i + 1) / nseg;
        segs.push_back({sa, sb, gk15(f, sa, sb)});
    }
    auto tol = [&](cplx total) {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    };
    QuadResult res;
    long max_panels = static_cast<long>(nseg) << std::min(cfg.max_depth, 24);
    max_panels = std::min<long>(max_panels, 200000);
    while (true) {
        cplx total{};
        double err = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].ev.kronrod;
            err += segs[i].ev.err;
            if (segs[i].ev.err > worst_err) {
                worst_err = segs[i].ev.err;
                worst = i;
            }
        }
        if (err <= tol(total) || static_cast<long>(segs.size()) >= max_panels) {
            res.value = total;
            res.abs_err_estimate = err;
            res.subdivisions = static_cast<int>(segs.size());
            if (err > tol(total)) res.status = QuadStatus::max_depth_exceeded;
            return res;
        }
        Seg s = segs[worst];
        double mid = 0.5 * (s.a + s.b);
        segs[worst] = {s.a, mid, gk15(f, s.a, mid)};
        segs.push_back({mid, s.b, gk15(f, mid, s.b)});
    }
}

}  // namespace detail

// Plain adaptive integral of a complex-valued integrand on [a, b].
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadConfig& cfg = {},
                     int initial_splits = 1) {
    if (a == b) return {};
    return detail::adaptive(f, a, b, cfg, initial_splits);
}

// Composite Gauss-Legendre nodes/weights on [a, b] (n-point panels).
// Used where the integrand is smooth and the node set must be reusable.
inline void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                           std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    // Newton on Legendre polynomials, standard construction.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        double xm = 0.5 * (a + b), xl = 0.5 * (b - a);
        x[i] = xm - xl * z;
        x[n - 1 - i] = xm + xl * z;
        w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

// ---------------------------------------------------------------------------
// oscillatory_quad: int_a^b amplitude(y) * e(phase(y)) dy.
//
// phase_deriv is checked against phase by central differences at five
// points; stationary points are bisected to ~1e-12 and become mandatory
// break points.  Between break points the interval is pre-partitioned so a
// panel never spans more than half a period of the local oscillation, after
// which the adaptive GK estimate drives everything.
// ---------------------------------------------------------------------------
template <class Amp, class Phase, class PhaseD>
QuadResult oscillatory_quad(Amp&& amplitude, Phase&& phase, PhaseD&& phase_deriv,
                            double a, double b, const QuadConfig& cfg = {}) {
    if (a == b) return {};
    if (a > b) {
        QuadResult r = oscillatory_quad(amplitude, phase, phase_deriv, b, a, cfg);
        r.value = -r.value;
        return r;
    }
    const double len = b - a;

    // Consistency check phase' ~ d(phase)/dy at 5 interior samples.
    for (int i = 1; i <= 5; ++i) {
        double y = a + len * i / 6.0;
        double h = std::max(1e-7 * len, 1e-9);
        double fd = (phase(y + h) - phase(y - h)) / (2.0 * h);
        double pd = phase_deriv(y);
        double scale = std::max({std::abs(fd), std::abs(pd), 1.0});
        if (std::abs(fd - pd) > 1e-6 * scale)
            throw InconsistentPhaseDerivative(
                "oscillatory_quad: phase_deriv disagrees with finite differences");
    }

    // Locate stationary points: scan for sign changes of phase', bisect.
    std::vector<double> brk{a, b};
    int nscan = 257;
    double prev_y = a, prev_d = phase_deriv(a);
    int n_stat = 0;
    for (int i = 1; i < nscan; ++i) {
        double y = a + len * i / (nscan - 1);
        double d = phase_deriv(y);
        if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0) ||
            prev_d == 0.0) {
            double lo = prev_y, hi = y, dlo = prev_d;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double dm = phase_deriv(mid);
                if ((dlo <= 0.0 && dm <= 0.0) || (dlo >= 0.0 && dm >= 0.0)) {
                    lo = mid;
                    dlo = dm;
                } else {
                    hi = mid;
                }
                if (hi - lo < 1e-12 * std::max(1.0, std::abs(mid))) break;
            }
            brk.push_back(0.5 * (lo + hi));
            ++n_stat;
        }
        prev_y = y;
        prev_d = d;
    }
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [&](double u, double v) {
                              return std::abs(u - v) < 1e-13 * std::max(1.0, len);
                          }),
              brk.end());

    auto f = [&](double y) { return amplitude(y) * e_of(phase(y)); };

    QuadResult total;
    total.stationary_points_found = n_stat;
    total.subdivisions = 0;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        double u = brk[i], v = brk[i + 1];
        // Half-period pre-partition: walk from u with steps keeping
        // |delta phase| <= 1/2 (phase is in cycles).
        std::vector<double> nodes{u};
        double y = u;
        int guard = 0;
        while (y < v && guard++ < 100000) {
            double d = std::abs(phase_deriv(y));
            double step = (d > 1e-300) ? 0.5 / d : (v - y);
            step = std::min(step, (v - u));
            step = std::max(step, 1e-6 * (v - u));
            y = std::min(v, y + step);
            nodes.push_back(y);
        }
        if (nodes.back() != v) nodes.push_back(v);
        // Merge into at most ~1600 initial panels; the adaptive pass
        // recovers anything the merge coarsened.
        std::size_t stride = std::max<std::size_t>(1, nodes.size() / 1600);
        QuadConfig sub = cfg;
        for (std::size_t j = 0; j + 1 < nodes.size(); j += stride) {
            double pa = nodes[j];
            double pb = nodes[std::min(j + stride, nodes.size() - 1)];
            QuadResult r = detail::adaptive(f, pa, pb, sub, 1);
            total.value += r.value;
            total.abs_err_estimate += r.abs_err_estimate;
            total.subdivisions += r.subdivisions;
            if (r.status == QuadStatus::max_depth_exceeded)
                total.status = QuadStatus::max_depth_exceeded;
        }
    }
    if (total.subdivisions == 0) total.subdivisions = 1;
    return total;
}

// ---------------------------------------------------------------------------
// vertical_line_quad: (1/(2 pi i)) int_{sigma - i inf}^{sigma + i inf} f(s) ds.
//
// Integrates symmetric panels outward from the real axis and truncates once
// the integrand magnitude has stayed below truncation_decay_threshold times
// the running peak for two consecutive panels on each side.
// ---------------------------------------------------------------------------
template <class F>
QuadResult vertical_line_quad(F&& integrand, double sigma,
                              const QuadConfig& cfg = {},
                              double panel_height = 1.0) {
    auto g = [&](double tau) { return integrand(cplx(sigma, tau)); };

    QuadResult total;
    total.subdivisions = 0;
    double peak = 0.0;
    const long max_panels = std::max(64L, 48L * cfg.max_depth);
    int quiet_up = 0, quiet_dn = 0;
    bool done_up = false, done_dn = false;
    for (long k = 0; k < max_panels && !(done_up && done_dn); ++k) {
        double lo = k * panel_height, hi = (k + 1) * panel_height;
        for (int side = 0; side < 2; ++side) {
            bool& done = side == 0 ? done_up : done_dn;
            int& quiet = side == 0 ? quiet_up : quiet_dn;
            if (done) continue;
            double pa = side == 0 ? lo : -hi;
            double pb = side == 0 ? hi : -lo;
            detail::PanelEval ev = detail::gk15(g, pa, pb);
            QuadResult r = detail::adaptive(g, pa, pb, cfg, 2);
            total.value += r.value;
            total.abs_err_estimate += r.abs_err_estimate;
            total.subdivisions += r.subdivisions;
            double mag = ev.abs_integral / panel_height;
            peak = std::max(peak, mag);
            if (peak > 0.0 && mag < cfg.truncation_decay_threshold * peak)
                ++quiet;
            else
                quiet = 0;
            if (quiet >= 2) done = true;
        }
    }
    if (!(done_up && done_dn))
        throw NoDecayDetected("vertical_line_quad: integrand never decayed");
    total.value *= cplx(0.0, 1.0) / cplx(0.0, TWO_PI);  // ds = i dtau, /(2 pi i)
    return total;
}

}  // namespace gl3trace
