#pragma once

#include "tempus/delta.hpp"
#include "tempus/timescale.hpp"

namespace tempus {

// Euler gamma via Lanczos (g = 7, 9 coefficients). Positive arguments only.
double gamma_fn(double x);

// Fractional order alpha > 0 together with n = ceil(alpha) >= 1.
struct FracOrder {
    double alpha;
    int n_ceil;

    explicit FracOrder(double alpha);
    bool is_integer() const;
};

// Kernel of the fractional integral: (t - sigma(s))^(alpha-1) is the one
// coherent with the time-scale Cauchy formula; (t - s)^(alpha-1) is kept for
// comparison.
enum class KernelVariant { Sigma, Plain };

// What to do with a scattered term whose kernel base is exactly zero while
// alpha < 1: treat 0^(alpha-1) as 0, or refuse.
enum class ZeroPowerPolicy { ZeroConvention, StrictError };

struct FracResult {
    double value;
    // Set when ZeroConvention actually zeroed a divergent term.
    bool singular_term_zeroed = false;
};

// (1/Γ(alpha)) ∫_a^t K(t,s)^(alpha-1) f(s) Δs, evaluated segment-wise.
FracResult frac_integral_ex(const ScaleFunction& f, const TimeScale& ts,
                            double a, double t, const FracOrder& ord,
                            KernelVariant kv,
                            ZeroPowerPolicy zp = ZeroPowerPolicy::ZeroConvention,
                            const QuadratureConfig& cfg = {});

double frac_integral(const ScaleFunction& f, const TimeScale& ts, double a,
                     double t, const FracOrder& ord, KernelVariant kv,
                     ZeroPowerPolicy zp = ZeroPowerPolicy::ZeroConvention,
                     const QuadratureConfig& cfg = {});

// The binomially expanded form of the integer-order sigma-kernel integral:
//   sum_{k=0}^{n-1} (-1)^k / (k! (n-1-k)!) * t^(n-1-k) * ∫_a^t sigma(s)^k f(s) Δs
double binomial_expanded_g(const ScaleFunction& f, const TimeScale& ts,
                           double a, double t, int n,
                           const QuadratureConfig& cfg = {});

// n-fold delta derivative. Dense points use nested numeric differencing with
// a step widened per level.
double iterated_delta_derivative(const ScaleFunction& f, const TimeScale& ts,
                                 double t, int n);

// Riemann-Liouville: (I^(n-alpha) f)^(Δ^n). Integer alpha reduces to the
// plain n-fold delta derivative.
double rl_derivative(const ScaleFunction& f, const TimeScale& ts, double a,
                     double t, const FracOrder& ord,
                     ZeroPowerPolicy zp = ZeroPowerPolicy::ZeroConvention,
                     const QuadratureConfig& cfg = {});

// Caputo: I^(n-alpha) (f^(Δ^n)) -- the operators of rl_derivative swapped.
double caputo_derivative(const ScaleFunction& f, const TimeScale& ts, double a,
                         double t, const FracOrder& ord,
                         ZeroPowerPolicy zp = ZeroPowerPolicy::ZeroConvention,
                         const QuadratureConfig& cfg = {});

} // namespace tempus
