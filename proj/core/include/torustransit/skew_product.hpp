#pragma once

#include <utility>
#include <vector>

#include "torustransit/circle_map.hpp"
#include "torustransit/exact_algebra.hpp"
#include "torustransit/matrix.hpp"

namespace torustransit {

/// x -> A x + b on the (n-1)-torus, A integer with det != 0.
class AffineBaseMap {
  public:
    AffineBaseMap(IMat matrix, QVec translation);

    size_t dim() const { return matrix_.rows(); }
    const IMat& matrix() const { return matrix_; }
    const QVec& translation() const { return translation_; }
    const Int& determinant() const { return det_; }
    Int degree() const { return det_ < 0 ? Int(-det_) : det_; }
    bool is_linear() const;  // translation == 0

    QVec apply_lift(const QVec& x) const;
    std::vector<double> apply_lift(const std::vector<double>& x) const;
    QVec apply_torus(const QVec& x) const;

    /// Exact inverse of the lift: A^{-1}(y - b).
    QVec inverse_lift(const QVec& y) const;

    /// All deg = |det A| torus preimages of y, enumerated through the
    /// Smith form of A. Deterministic order.
    std::vector<QVec> preimages_torus(const QVec& y) const;

  private:
    IMat matrix_;
    QVec translation_;
    Int det_;
    SmithDecomposition snf_;
};

/// f(x,t) = (A x + b, c.x + beta + psi(t)) mod 1 on the n-torus: affine
/// integer base, additively coupled piecewise-linear fiber.
class SkewProductSystem {
  public:
    SkewProductSystem(AffineBaseMap base, IVec coupling, Rational fiber_offset,
                      PiecewiseLinearCircleMap fiber);

    size_t dim() const { return base_.dim() + 1; }
    const AffineBaseMap& base() const { return base_; }
    const IVec& coupling() const { return coupling_; }
    const Rational& fiber_offset() const { return fiber_offset_; }
    const PiecewiseLinearCircleMap& fiber() const { return fiber_; }

    /// Signed eigenvalue of the linear part on the fiber direction.
    const Int& fiber_eigenvalue() const { return fiber_.signed_degree(); }
    Int fiber_degree() const { return fiber_.degree(); }
    Int base_degree() const { return base_.degree(); }
    Int total_degree() const { return fiber_degree() * base_degree(); }

    QVec eval(const QVec& p) const;
    std::vector<double> eval(const std::vector<double>& p) const;
    QVec lift_eval(const QVec& p) const;
    std::vector<double> lift_eval(const std::vector<double>& p) const;

    /// Block matrix [[A, 0], [c, lambda_n]].
    IMat linear_part() const;

    struct Preimage {
        QVec point;
        Rational jacobian;  // |det A| * |fiber slope|
    };

    /// All deg(f) preimages with their volume Jacobians. Throws
    /// DegeneratePointError when a fiber preimage lands on a slope jump.
    std::vector<Preimage> preimages(const QVec& q) const;

    /// Exact sup-norm bound on (lift - linear part) over the unit cube;
    /// attained at the fiber breakpoints and the base translation.
    Rational lift_deviation_bound() const;

    /// Slab exponents (k1, k2) with k2 minimal such that the lift
    /// preimage of the slab stays inside it; needs fiber eigenvalue >= 2.
    std::pair<Int, Int> slab_bounds() const;

  private:
    AffineBaseMap base_;
    IVec coupling_;
    Rational fiber_offset_;
    PiecewiseLinearCircleMap fiber_;
};

/// k2 = smallest integer >= deviation/(degree-1), k1 = -k2.
std::pair<Int, Int> slab_bounds_for(const Rational& deviation, const Int& fiber_degree);

}  // namespace torustransit
