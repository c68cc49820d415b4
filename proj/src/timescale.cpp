#include "tempus/timescale.hpp"

#include <algorithm>
#include <cmath>

namespace tempus {

TimeScale TimeScale::from_pieces(std::vector<Piece> pieces)
{
    if (pieces.empty())
        throw EmptyScaleError();
    for (const auto& p : pieces) {
        if (!std::isfinite(p.left))
            throw NonFiniteError(p.left);
        if (!std::isfinite(p.right))
            throw NonFiniteError(p.right);
        if (p.left > p.right)
            throw InvalidPieceError(p.left, p.right);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& x, const Piece& y) { return x.left < y.left; });

    TimeScale ts;
    Piece cur = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        // A gap below the snap tolerance is indistinguishable from touching.
        if (p.left <= cur.right + detail::snap_eps(cur.right)) {
            cur.right = std::max(cur.right, p.right);
        } else {
            ts.pieces_.push_back(cur);
            cur = p;
        }
    }
    ts.pieces_.push_back(cur);
    return ts;
}

std::optional<double> TimeScale::snap(double t) const
{
    if (!std::isfinite(t))
        return std::nullopt;
    const double eps = detail::snap_eps(t);
    // First piece whose right end is not left of t.
    auto it = std::lower_bound(
        pieces_.begin(), pieces_.end(), t,
        [eps](const Piece& p, double v) { return p.right < v - eps; });
    if (it == pieces_.end())
        return std::nullopt;
    if (t < it->left - eps)
        return std::nullopt;
    if (t <= it->left)
        return it->left;
    if (t >= it->right)
        return it->right;
    return t;
}

double TimeScale::require(double t) const
{
    auto s = snap(t);
    if (!s)
        throw NotInScaleError(t);
    return *s;
}

std::size_t TimeScale::piece_index(double t) const
{
    auto it = std::lower_bound(
        pieces_.begin(), pieces_.end(), t,
        [](const Piece& p, double v) { return p.right < v; });
    return static_cast<std::size_t>(it - pieces_.begin());
}

double TimeScale::sigma(double t) const
{
    const double s = require(t);
    const std::size_t i = piece_index(s);
    if (s < pieces_[i].right)
        return s;
    if (i + 1 < pieces_.size())
        return pieces_[i + 1].left;
    return s; // maximum of the scale
}

double TimeScale::rho(double t) const
{
    const double s = require(t);
    const std::size_t i = piece_index(s);
    if (s > pieces_[i].left)
        return s;
    if (i > 0)
        return pieces_[i - 1].right;
    return s; // minimum of the scale
}

double TimeScale::graininess(double t) const { return sigma(t) - require(t); }

PointClass TimeScale::classify(double t) const
{
    const double s = require(t);
    PointClass pc;
    pc.right_scattered = sigma(s) > s;
    pc.left_scattered = rho(s) < s;
    pc.is_min = s == min();
    pc.is_max = s == max();
    return pc;
}

std::vector<Segment> TimeScale::decompose(double a, double b) const
{
    const double sa = require(a);
    const double sb = require(b);
    if (sa > sb)
        throw ReversedBoundsError(sa, sb);

    std::vector<Segment> segs;
    if (sa == sb)
        return segs;

    for (std::size_t i = piece_index(sa); i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        const double l = std::max(p.left, sa);
        if (l >= sb)
            break;
        const double r = std::min(p.right, sb);
        if (r > l)
            segs.push_back(Segment::continuous(l, r));
        if (p.right < sb) {
            // right end of this piece is right-scattered inside [a,b)
            segs.push_back(
                Segment::scattered(p.right, pieces_[i + 1].left - p.right));
        } else {
            break; // b lies in this piece
        }
    }
    return segs;
}

namespace {

struct GenerateVisitor {
    std::vector<Piece>& out;

    void operator()(const IntegersSpec& g) const
    {
        if (g.a > g.b)
            throw InvalidGeneratorError("integers: a > b");
        for (long long k = g.a; k <= g.b; ++k) {
            double v = static_cast<double>(k);
            out.push_back({v, v});
        }
    }
    void operator()(const RealIntervalSpec& g) const
    {
        if (!(g.a < g.b))
            throw InvalidGeneratorError("real_interval: requires a < b");
        out.push_back({g.a, g.b});
    }
    void operator()(const QScaleSpec& g) const
    {
        if (!(g.q > 0.0 && g.q < 1.0))
            throw InvalidGeneratorError("q_scale: q must lie in (0,1)");
        if (g.kmin > g.kmax)
            throw InvalidGeneratorError("q_scale: kmin > kmax");
        for (long long k = g.kmin; k <= g.kmax; ++k) {
            double v = std::pow(g.q, static_cast<double>(k));
            out.push_back({v, v});
        }
    }
    void operator()(const UnionSpec& g) const
    {
        if (!g.first || !g.second)
            throw InvalidGeneratorError("union: missing operand");
        std::visit(*this, g.first->node);
        std::visit(*this, g.second->node);
    }
};

} // namespace

TimeScale generate(const GeneratorSpec& spec)
{
    std::vector<Piece> pieces;
    std::visit(GenerateVisitor{pieces}, spec.node);
    return TimeScale::from_pieces(std::move(pieces));
}

} // namespace tempus
