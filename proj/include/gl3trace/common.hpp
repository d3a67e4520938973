#pragma once

// Shared basics: complex alias, constants, compensated summation, errors,
// and a deterministic chunked parallel-for used by the bigger scans.

#include <complex>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gl3trace {

using cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double SQRT_PI = 1.772453850905516027298167483341145183;
inline constexpr double EULER_GAMMA = 0.577215664901532860606512090082402431;
inline constexpr double LN_2PI = 1.837877066409345483560659472811235279;

// e(x) = exp(2*pi*i*x)
inline cplx e_of(double x) {
    double w = TWO_PI * x;
    return {std::cos(w), std::sin(w)};
}
inline cplx e_of(cplx x) {
    return std::exp(cplx(0.0, TWO_PI) * x);
}

// ---------------------------------------------------------------------------
// Errors. Names follow the contracts of the individual operations.
// ---------------------------------------------------------------------------
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};
struct DivisibilityViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleOfGamma : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleAtOne : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleOfF : std::domain_error {
    using std::domain_error::domain_error;
};
struct NearPoleOfZeta : std::domain_error {
    using std::domain_error::domain_error;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct RegimeViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct ContourViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct InconsistentPhaseDerivative : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoDecayDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientCoefficients : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TailNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SpectralCoverageInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NetworkUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Kahan-compensated accumulators.  All the exponential sums are evaluated
// with these; the summand-count cap keeps desk-scale exactness honest.
// ---------------------------------------------------------------------------
class KahanSum {
  public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumC {
  public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

  private:
    KahanSum re_, im_;
};

inline constexpr std::int64_t kMaxExpSumTerms = 1'000'000;

// ---------------------------------------------------------------------------
// Deterministic parallel map: results land in index order regardless of
// scheduling, so reductions are bit-stable run to run.
// ---------------------------------------------------------------------------
template <class F>
void parallel_for_indexed(std::size_t n, F&& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(hw, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace gl3trace
