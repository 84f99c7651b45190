#include "torustransit/circle_map.hpp"

#include <algorithm>
#include <cmath>

#include "torustransit/errors.hpp"

namespace torustransit {

PiecewiseLinearCircleMap::PiecewiseLinearCircleMap(QVec breakpoints, QVec lift_values)
    : breakpoints_(std::move(breakpoints)), lift_values_(std::move(lift_values)) {
    if (breakpoints_.size() < 2 || breakpoints_.size() != lift_values_.size())
        throw InvalidInput("breakpoints and lift values must align, with at least one piece");
    if (breakpoints_.front() != 0 || breakpoints_.back() != 1)
        throw InvalidInput("breakpoints must start at 0 and end at 1");
    for (size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (breakpoints_[i] >= breakpoints_[i + 1])
            throw InvalidInput("breakpoints must be strictly increasing");

    Rational rise = lift_values_.back() - lift_values_.front();
    if (rise.get_den() != 1 || rise == 0)
        throw InvalidInput("lift must rise by a nonzero integer over one period");
    degree_ = rise.get_num();

    slopes_.resize(piece_count());
    for (size_t i = 0; i < piece_count(); ++i) {
        slopes_[i] = (lift_values_[i + 1] - lift_values_[i]) /
                     (breakpoints_[i + 1] - breakpoints_[i]);
        if (slopes_[i] == 0 || (slopes_[i] > 0) != (degree_ > 0))
            throw InvalidInput("lift must be strictly monotone with one slope sign");
    }

    bp_d_.resize(breakpoints_.size());
    val_d_.resize(lift_values_.size());
    slope_d_.resize(slopes_.size());
    for (size_t i = 0; i < breakpoints_.size(); ++i) bp_d_[i] = breakpoints_[i].get_d();
    for (size_t i = 0; i < lift_values_.size(); ++i) val_d_[i] = lift_values_[i].get_d();
    for (size_t i = 0; i < slopes_.size(); ++i) slope_d_[i] = slopes_[i].get_d();
    degree_d_ = degree_.get_d();
}

PiecewiseLinearCircleMap PiecewiseLinearCircleMap::linear(const Int& d) {
    return PiecewiseLinearCircleMap(QVec{Rational(0), Rational(1)},
                                    QVec{Rational(0), Rational(d)});
}

bool PiecewiseLinearCircleMap::kink_at(size_t i) const {
    const Rational& left = i == 0 ? slopes_.back() : slopes_[i - 1];
    return left != slopes_[i % piece_count()];
}

Rational PiecewiseLinearCircleMap::lift_eval(const Rational& t) const {
    const Int shift = floor_int(t);
    const Rational u = t - Rational(shift);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), u);
    const size_t piece = static_cast<size_t>(it - breakpoints_.begin()) - 1;
    return lift_values_[piece] + slopes_[piece] * (u - breakpoints_[piece]) +
           Rational(degree_ * shift);
}

double PiecewiseLinearCircleMap::lift_eval(double t) const {
    const double shift = std::floor(t);
    double u = t - shift;
    if (u >= 1.0) u = 0.0;
    // Left piece at exact breakpoints, chosen once so float paths are
    // deterministic.
    auto it = std::lower_bound(bp_d_.begin(), bp_d_.end(), u);
    size_t idx = static_cast<size_t>(it - bp_d_.begin());
    double value;
    if (idx < bp_d_.size() && bp_d_[idx] == u) {
        value = val_d_[idx];
    } else {
        const size_t piece = idx - 1;
        value = val_d_[piece] + slope_d_[piece] * (u - bp_d_[piece]);
    }
    return value + degree_d_ * shift;
}

double PiecewiseLinearCircleMap::eval(double t) const {
    double v = lift_eval(t);
    double f = v - std::floor(v);
    if (f >= 1.0) f = 0.0;
    return f;
}

Rational PiecewiseLinearCircleMap::lift_inverse(const Rational& v) const {
    if (!orientation_preserving())
        throw UnsupportedOrientationError("lift inversion needs an increasing lift");
    const Int shift = floor_int((v - lift_values_.front()) / Rational(degree_));
    const Rational u = v - Rational(degree_ * shift);  // in [v0, v0 + degree)
    auto it = std::upper_bound(lift_values_.begin(), lift_values_.end(), u);
    const size_t piece = static_cast<size_t>(it - lift_values_.begin()) - 1;
    return breakpoints_[piece] + (u - lift_values_[piece]) / slopes_[piece] + Rational(shift);
}

double PiecewiseLinearCircleMap::lift_inverse(double v) const {
    if (!orientation_preserving())
        throw UnsupportedOrientationError("lift inversion needs an increasing lift");
    const double shift = std::floor((v - val_d_.front()) / degree_d_);
    double u = v - degree_d_ * shift;
    if (u < val_d_.front()) u = val_d_.front();
    if (u > val_d_.back()) u = val_d_.back();
    auto it = std::upper_bound(val_d_.begin(), val_d_.end(), u);
    size_t piece = static_cast<size_t>(it - val_d_.begin());
    piece = piece == 0 ? 0 : piece - 1;
    if (piece >= slope_d_.size()) piece = slope_d_.size() - 1;
    return bp_d_[piece] + (u - val_d_[piece]) / slope_d_[piece] + shift;
}

std::vector<PiecewiseLinearCircleMap::Preimage> PiecewiseLinearCircleMap::preimages(
    const Rational& s) const {
    const Rational target = frac_part(s);
    std::vector<Preimage> out;
    for (size_t piece = 0; piece < piece_count(); ++piece) {
        const Rational& lo = lift_values_[piece];
        const Rational& hi = lift_values_[piece + 1];
        if (slopes_[piece] > 0) {
            // t in [bp_i, bp_{i+1}) matches values in [lo, hi).
            for (Int j = ceil_int(lo - target); Rational(target) + Rational(j) < hi; ++j) {
                Rational t = breakpoints_[piece] + (target + Rational(j) - lo) / slopes_[piece];
                out.push_back({t, slopes_[piece],
                               t == breakpoints_[piece] && kink_at(piece)});
            }
        } else {
            // Decreasing piece: t in [bp_i, bp_{i+1}) matches values in (hi, lo].
            for (Int j = floor_int(lo - target); Rational(target) + Rational(j) > hi; --j) {
                Rational t = breakpoints_[piece] + (target + Rational(j) - lo) / slopes_[piece];
                out.push_back({t, slopes_[piece],
                               t == breakpoints_[piece] && kink_at(piece)});
            }
        }
    }
    return out;
}

}  // namespace torustransit
