#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "tempus/errors.hpp"

namespace tempus {

// One maximal closed interval of the scale; left == right is an isolated
// point.
struct Piece {
    double left;
    double right;
};

struct PointClass {
    bool right_scattered = false;
    bool left_scattered = false;
    bool is_min = false;
    bool is_max = false;

    bool right_dense() const { return !right_scattered; }
    bool left_dense() const { return !left_scattered; }
    bool isolated() const { return right_scattered && left_scattered; }
};

// Element of an integration decomposition over [a,b] ∩ T: either a
// sub-interval of positive length fully contained in the scale, or a
// right-scattered point carrying its graininess.
struct Segment {
    enum class Kind { Continuous, Scattered };

    Kind kind;
    double a = 0; // Continuous: [a, b], a < b
    double b = 0;
    double point = 0; // Scattered: point s with sigma(s) = s + mu
    double mu = 0;

    static Segment continuous(double a, double b)
    {
        Segment s;
        s.kind = Kind::Continuous;
        s.a = a;
        s.b = b;
        return s;
    }
    static Segment scattered(double point, double mu)
    {
        Segment s;
        s.kind = Kind::Scattered;
        s.point = point;
        s.mu = mu;
        return s;
    }
    double measure() const { return kind == Kind::Continuous ? b - a : mu; }

    friend bool operator==(const Segment&, const Segment&) = default;
};

// A nonempty closed bounded subset of the reals, stored as an ordered list
// of disjoint closed intervals. Immutable after construction.
class TimeScale {
public:
    // Sorts, merges touching/overlapping pieces, validates finiteness.
    static TimeScale from_pieces(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    double min() const { return pieces_.front().left; }
    double max() const { return pieces_.back().right; }

    // Membership with boundary snapping: a query within
    // 1e-12 * max(1, |t|) of a piece boundary counts as that boundary.
    // Returns the canonical in-scale value, or nullopt.
    std::optional<double> snap(double t) const;
    bool contains(double t) const { return snap(t).has_value(); }

    // snap() or throw NotInScaleError.
    double require(double t) const;

    // Forward jump: inf{s in T : s > t}; t itself at the maximum.
    double sigma(double t) const;
    // Backward jump: sup{s in T : s < t}; t itself at the minimum.
    double rho(double t) const;
    // mu(t) = sigma(t) - t.
    double graininess(double t) const;

    PointClass classify(double t) const;

    // Half-open decomposition of [a,b) ∩ T: ordered disjoint segments whose
    // union with {b} covers [a,b] ∩ T. Empty when a == b.
    std::vector<Segment> decompose(double a, double b) const;

private:
    TimeScale() = default;

    // Index of the piece containing the (already snapped) point.
    std::size_t piece_index(double t) const;

    std::vector<Piece> pieces_;
};

// Scale generators: finite windows of the classical model scales.
struct IntegersSpec {
    long long a;
    long long b;
};
struct RealIntervalSpec {
    double a;
    double b;
};
struct QScaleSpec {
    double q;
    long long kmin;
    long long kmax;
};
struct GeneratorSpec;
struct UnionSpec {
    std::shared_ptr<GeneratorSpec> first;
    std::shared_ptr<GeneratorSpec> second;
};
struct GeneratorSpec {
    std::variant<IntegersSpec, RealIntervalSpec, QScaleSpec, UnionSpec> node;
};

TimeScale generate(const GeneratorSpec& spec);

namespace detail {
// Absolute snap tolerance used for membership and kernel-zero tests.
inline double snap_eps(double t)
{
    double at = t < 0 ? -t : t;
    return 1e-12 * (at > 1 ? at : 1.0);
}
} // namespace detail

} // namespace tempus
