#include "tempus/delta.hpp"

#include <cmath>
#include <limits>

namespace tempus {

namespace {

// Gauss-Kronrod 7-15 abscissae (positive half) and weights.
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};

// Weights of the embedded 7-point Gauss rule (nodes 1, 3, 5, 7 above).
constexpr double kGaussWeights[4] = {0.129484966168870, 0.279705391489277,
                                     0.381830050505119, 0.417959183673469};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fc = f(c);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kKronrodNodes[i];
        const double fsum = f(c - x) + f(c + x);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::fabs(kronrod - gauss)};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, const QuadratureConfig& cfg)
{
    const PanelResult r = gk15(f, a, b);
    if (r.error <= tol || r.error <= cfg.rel_tol * std::fabs(r.value))
        return r.value;
    if (depth >= cfg.max_depth)
        throw QuadratureFailureError();
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1, cfg)
        + adapt(f, m, b, 0.5 * tol, depth + 1, cfg);
}

} // namespace

namespace detail {

double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg)
{
    if (a == b)
        return 0.0;
    return adapt(f, a, b, cfg.abs_tol, 0, cfg);
}

double delta_derivative_step(const ScaleFunction& f, const TimeScale& ts,
                             double t, double step)
{
    const double s = ts.require(t);
    const PointClass pc = ts.classify(s);

    if (pc.right_scattered) {
        const double mu = ts.graininess(s);
        return (f(ts.sigma(s)) - f(s)) / mu;
    }

    // Right-dense: differentiate inside the continuous piece containing t.
    const Piece* piece = nullptr;
    for (const auto& p : ts.pieces()) {
        if (s >= p.left && s <= p.right) {
            piece = &p;
            break;
        }
    }
    const double room_right = piece->right - s;
    const double room_left = pc.left_scattered ? 0.0 : s - piece->left;

    if (room_right > 0.0 && room_left > 0.0) {
        const double h =
            std::min({step, 0.5 * room_right, 0.5 * room_left});
        auto central = [&](double hh) {
            return (f(s + hh) - f(s - hh)) / (2.0 * hh);
        };
        const double d1 = central(h);
        const double d2 = central(0.5 * h);
        return (4.0 * d2 - d1) / 3.0;
    }
    if (room_right > 0.0) {
        const double h = std::min(step, 0.5 * room_right);
        auto forward = [&](double hh) { return (f(s + hh) - f(s)) / hh; };
        return 2.0 * forward(0.5 * h) - forward(h);
    }
    if (room_left > 0.0) {
        // t is the maximum of the scale, approached from the left.
        const double h = std::min(step, 0.5 * room_left);
        auto backward = [&](double hh) { return (f(s) - f(s - hh)) / hh; };
        return 2.0 * backward(0.5 * h) - backward(h);
    }
    throw BoundaryDerivativeError(s);
}

} // namespace detail

double delta_derivative(const ScaleFunction& f, const TimeScale& ts, double t)
{
    const double scale = std::max(1.0, std::fabs(t));
    const double h0 =
        std::cbrt(std::numeric_limits<double>::epsilon()) * scale;
    return detail::delta_derivative_step(f, ts, t, h0);
}

double delta_integral(const ScaleFunction& f, const TimeScale& ts, double a,
                      double b, const QuadratureConfig& cfg)
{
    const auto segs = ts.decompose(a, b);

    int continuous_count = 0;
    for (const auto& s : segs)
        if (s.kind == Segment::Kind::Continuous)
            ++continuous_count;

    QuadratureConfig piece_cfg = cfg;
    if (continuous_count > 1)
        piece_cfg.abs_tol = cfg.abs_tol / continuous_count;

    double total = 0.0;
    for (const auto& s : segs) {
        if (s.kind == Segment::Kind::Continuous)
            total += detail::adaptive_quadrature(f.fn, s.a, s.b, piece_cfg);
        else
            total += s.mu * f(s.point);
    }
    return total;
}

double repeated_integral(const ScaleFunction& f, const TimeScale& ts, double a,
                         double t, int n, const QuadratureConfig& cfg)
{
    if (n < 1)
        throw Error("repeated_integral requires n >= 1");
    if (n == 1)
        return delta_integral(f, ts, a, t, cfg);
    ScaleFunction inner{
        [&](double tau) { return repeated_integral(f, ts, a, tau, n - 1, cfg); },
        f.label};
    return delta_integral(inner, ts, a, t, cfg);
}

} // namespace tempus
