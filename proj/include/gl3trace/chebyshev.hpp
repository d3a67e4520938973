#pragma once

// Chebyshev interpolants on [a, b].  Used to cache the expensive kernels
// (k*, its Fourier transform, Mellin data) so the transforms can evaluate
// them millions of times at interpolation cost.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gl3trace/common.hpp"

namespace gl3trace {

template <class T>
class Chebyshev {
  public:
    Chebyshev() = default;

    // Samples f at the N Chebyshev nodes of the second kind and stores the
    // coefficient expansion.  O(N^2) transform; N stays in the hundreds here.
    template <class F>
    Chebyshev(F&& f, double a, double b, int n) : a_(a), b_(b), coef_(n) {
        if (n < 2 || !(b > a)) throw std::invalid_argument("Chebyshev: bad grid");
        std::vector<T> vals(n);
        for (int k = 0; k < n; ++k) {
            double theta = PI * (k + 0.5) / n;
            double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
            vals[k] = f(x);
        }
        for (int j = 0; j < n; ++j) {
            T acc{};
            for (int k = 0; k < n; ++k)
                acc += vals[k] * std::cos(PI * j * (k + 0.5) / n);
            coef_[j] = acc * (2.0 / n);
        }
        coef_[0] *= 0.5;
    }

    T operator()(double x) const {
        // Clenshaw on the mapped variable; clamp guards roundoff at the ends.
        double u = (2.0 * x - (a_ + b_)) / (b_ - a_);
        u = std::clamp(u, -1.0, 1.0);
        T b1{}, b2{};
        for (int j = static_cast<int>(coef_.size()) - 1; j >= 1; --j) {
            T tmp = b1;
            b1 = coef_[j] + 2.0 * u * b1 - b2;
            b2 = tmp;
        }
        return coef_[0] + u * b1 - b2;
    }

    double a() const { return a_; }
    double b() const { return b_; }
    bool empty() const { return coef_.empty(); }

    // Interpolant of the derivative (standard coefficient recurrence).
    Chebyshev derivative() const {
        int n = static_cast<int>(coef_.size());
        Chebyshev d;
        d.a_ = a_;
        d.b_ = b_;
        d.coef_.assign(n, T{});
        if (n >= 2) {
            std::vector<T> c(coef_);
            c[0] *= 2.0;  // undo halved c0 for the recurrence
            std::vector<T> dc(n + 1, T{});
            for (int j = n - 1; j >= 1; --j)
                dc[j - 1] = dc[j + 1] + 2.0 * j * c[j];
            double scale = 2.0 / (b_ - a_);
            for (int j = 0; j < n; ++j) d.coef_[j] = dc[j] * scale;
            d.coef_[0] *= 0.5;
        }
        return d;
    }

  private:
    double a_ = 0.0, b_ = 1.0;
    std::vector<T> coef_;
};

using ChebyshevD = Chebyshev<double>;
using ChebyshevC = Chebyshev<cplx>;

}  // namespace gl3trace
