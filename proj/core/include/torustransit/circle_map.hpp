#pragma once

#include <vector>

#include "torustransit/rational.hpp"

namespace torustransit {

/// Piecewise-linear covering map of the circle, stored through its lift:
/// rational breakpoints 0 = t0 < ... < tp = 1 and the lift values at
/// them, affine in between. The lift is strictly monotone and rises by
/// the (nonzero integer) signed degree over one period.
class PiecewiseLinearCircleMap {
  public:
    PiecewiseLinearCircleMap(QVec breakpoints, QVec lift_values);

    /// Lift t -> d*t of the degree-d linear covering.
    static PiecewiseLinearCircleMap linear(const Int& d);

    const QVec& breakpoints() const { return breakpoints_; }
    const QVec& lift_values() const { return lift_values_; }
    size_t piece_count() const { return breakpoints_.size() - 1; }
    const Rational& slope(size_t piece) const { return slopes_[piece]; }

    const Int& signed_degree() const { return degree_; }
    Int degree() const { return degree_ < 0 ? Int(-degree_) : degree_; }
    bool orientation_preserving() const { return degree_ > 0; }

    /// True when the one-sided slopes at breakpoint i differ (index 0
    /// compares against the last piece of the previous period).
    bool kink_at(size_t breakpoint_index) const;

    Rational lift_eval(const Rational& t) const;
    double lift_eval(double t) const;
    Rational eval(const Rational& t) const { return frac_part(lift_eval(t)); }
    double eval(double t) const;

    /// Inverse of the lift; orientation-preserving maps only.
    Rational lift_inverse(const Rational& v) const;
    double lift_inverse(double v) const;

    struct Preimage {
        Rational t;
        Rational slope;
        bool at_kink;  // t falls exactly on a breakpoint with a slope jump
    };

    /// All t in [0,1) with map(t) = s mod 1, ascending, each with the
    /// local slope. Generic s yields exactly |degree| hits.
    std::vector<Preimage> preimages(const Rational& s) const;

  private:
    QVec breakpoints_;
    QVec lift_values_;
    std::vector<Rational> slopes_;
    Int degree_;
    // Double mirrors for the simulator paths.
    std::vector<double> bp_d_, val_d_, slope_d_;
    double degree_d_ = 0;
};

}  // namespace torustransit
