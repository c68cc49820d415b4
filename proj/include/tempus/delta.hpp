#pragma once

#include <functional>
#include <string>

#include "tempus/timescale.hpp"

namespace tempus {

// Evaluable real function on a scale. `label` records where it came from
// (expression text or "<host>") for reports.
struct ScaleFunction {
    std::function<double(double)> fn;
    std::string label = "<host>";

    double operator()(double t) const { return fn(t); }
};

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 50;
};

// Delta derivative of f at t: exact difference quotient at right-scattered
// points, Richardson-extrapolated finite difference at right-dense ones.
double delta_derivative(const ScaleFunction& f, const TimeScale& ts, double t);

// ∫_a^b f(s) Δs: graininess-weighted sum over scattered points plus adaptive
// quadrature over continuous pieces.
double delta_integral(const ScaleFunction& f, const TimeScale& ts, double a,
                      double b, const QuadratureConfig& cfg = {});

// n-fold nested delta integral; inner antiderivatives are evaluated
// recursively at every outer node.
double repeated_integral(const ScaleFunction& f, const TimeScale& ts, double a,
                         double t, int n, const QuadratureConfig& cfg = {});

namespace detail {

// Dense-point derivative with an explicit base step; used by the iterated
// derivative, which widens the step per nesting level.
double delta_derivative_step(const ScaleFunction& f, const TimeScale& ts,
                             double t, double step);

// Adaptive Gauss-Kronrod (G7/K15) on a plain real interval.
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg);

} // namespace detail

} // namespace tempus
