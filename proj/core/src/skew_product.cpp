#include "torustransit/skew_product.hpp"

#include "torustransit/errors.hpp"

namespace torustransit {

AffineBaseMap::AffineBaseMap(IMat matrix, QVec translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
    if (!matrix_.square()) throw DimensionError("base matrix must be square");
    if (translation_.size() != matrix_.rows())
        throw DimensionError("translation length must match the base dimension");
    det_ = det(matrix_);
    if (det_ == 0) throw InvalidInput("base matrix must be nonsingular");
    snf_ = smith_normal_form(matrix_);
}

bool AffineBaseMap::is_linear() const {
    for (const auto& b : translation_)
        if (b != 0) return false;
    return true;
}

QVec AffineBaseMap::apply_lift(const QVec& x) const {
    if (x.size() != dim()) throw DimensionError("base point of wrong dimension");
    QVec out(dim(), Rational(0));
    for (size_t i = 0; i < dim(); ++i) {
        for (size_t j = 0; j < dim(); ++j) out[i] += Rational(matrix_(i, j)) * x[j];
        out[i] += translation_[i];
    }
    return out;
}

std::vector<double> AffineBaseMap::apply_lift(const std::vector<double>& x) const {
    if (x.size() != dim()) throw DimensionError("base point of wrong dimension");
    std::vector<double> out(dim(), 0.0);
    for (size_t i = 0; i < dim(); ++i) {
        for (size_t j = 0; j < dim(); ++j) out[i] += matrix_(i, j).get_d() * x[j];
        out[i] += translation_[i].get_d();
    }
    return out;
}

QVec AffineBaseMap::apply_torus(const QVec& x) const { return reduce_mod1(apply_lift(x)); }

QVec AffineBaseMap::inverse_lift(const QVec& y) const {
    auto sol = solve_linear(to_rational(matrix_), qvec_sub(y, translation_));
    if (!sol) throw SingularMatrixError("base matrix inversion failed");
    return *sol;
}

std::vector<QVec> AffineBaseMap::preimages_torus(const QVec& y) const {
    const size_t m = dim();
    const QVec x0 = inverse_lift(reduce_mod1(y));
    // Coset representatives of Z^m / A Z^m: with U A V = D, the points
    // V D^{-1} j mod 1 over j_i in [0, d_i) hit every residue once.
    std::vector<QVec> out;
    IVec j(m, Int(0));
    while (true) {
        QVec offset(m, Rational(0));
        for (size_t col = 0; col < m; ++col) {
            if (j[col] == 0) continue;
            Rational step = make_rational(j[col], snf_.d(col, col));
            for (size_t row = 0; row < m; ++row)
                offset[row] += Rational(snf_.v(row, col)) * step;
        }
        out.push_back(reduce_mod1(qvec_add(x0, offset)));
        size_t carry = 0;
        while (carry < m) {
            ++j[carry];
            if (j[carry] < snf_.d(carry, carry)) break;
            j[carry] = 0;
            ++carry;
        }
        if (carry == m) break;
    }
    return out;
}

SkewProductSystem::SkewProductSystem(AffineBaseMap base, IVec coupling, Rational fiber_offset,
                                     PiecewiseLinearCircleMap fiber)
    : base_(std::move(base)),
      coupling_(std::move(coupling)),
      fiber_offset_(std::move(fiber_offset)),
      fiber_(std::move(fiber)) {
    if (coupling_.size() != base_.dim())
        throw DimensionError("coupling length must match the base dimension");
}

QVec SkewProductSystem::lift_eval(const QVec& p) const {
    if (p.size() != dim()) throw DimensionError("point of wrong dimension");
    const QVec x(p.begin(), p.end() - 1);
    QVec out = base_.apply_lift(x);
    Rational t = fiber_offset_ + fiber_.lift_eval(p.back());
    for (size_t i = 0; i < x.size(); ++i) t += Rational(coupling_[i]) * x[i];
    out.push_back(t);
    return out;
}

QVec SkewProductSystem::eval(const QVec& p) const { return reduce_mod1(lift_eval(reduce_mod1(p))); }

std::vector<double> SkewProductSystem::lift_eval(const std::vector<double>& p) const {
    if (p.size() != dim()) throw DimensionError("point of wrong dimension");
    const std::vector<double> x(p.begin(), p.end() - 1);
    std::vector<double> out = base_.apply_lift(x);
    double t = fiber_offset_.get_d() + fiber_.lift_eval(p.back());
    for (size_t i = 0; i < x.size(); ++i) t += coupling_[i].get_d() * x[i];
    out.push_back(t);
    return out;
}

std::vector<double> SkewProductSystem::eval(const std::vector<double>& p) const {
    return reduce_mod1(lift_eval(reduce_mod1(p)));
}

IMat SkewProductSystem::linear_part() const {
    const size_t m = base_.dim();
    IMat a(m + 1, m + 1);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a(i, j) = base_.matrix()(i, j);
    for (size_t j = 0; j < m; ++j) a(m, j) = coupling_[j];
    a(m, m) = fiber_eigenvalue();
    return a;
}

std::vector<SkewProductSystem::Preimage> SkewProductSystem::preimages(const QVec& q) const {
    if (q.size() != dim()) throw DimensionError("point of wrong dimension");
    const QVec target = reduce_mod1(q);
    const QVec y(target.begin(), target.end() - 1);
    const Rational jac_base(base_.degree());
    std::vector<Preimage> out;
    for (const QVec& x : base_.preimages_torus(y)) {
        Rational s = target.back() - fiber_offset_;
        for (size_t i = 0; i < x.size(); ++i) s -= Rational(coupling_[i]) * x[i];
        for (const auto& hit : fiber_.preimages(frac_part(s))) {
            if (hit.at_kink)
                throw DegeneratePointError("preimage of " + format_qvec(target) +
                                           " meets a fiber slope jump");
            QVec p = x;
            p.push_back(hit.t);
            Rational slope = hit.slope < 0 ? Rational(-hit.slope) : hit.slope;
            out.push_back({std::move(p), jac_base * slope});
        }
    }
    return out;
}

Rational SkewProductSystem::lift_deviation_bound() const {
    Rational best(0);
    for (const Rational& b : base_.translation()) {
        Rational a = b < 0 ? Rational(-b) : b;
        if (a > best) best = a;
    }
    const Rational lambda(fiber_eigenvalue());
    for (size_t i = 0; i < fiber_.breakpoints().size(); ++i) {
        Rational dev = fiber_offset_ + fiber_.lift_values()[i] - lambda * fiber_.breakpoints()[i];
        if (dev < 0) dev = -dev;
        if (dev > best) best = dev;
    }
    return best;
}

std::pair<Int, Int> SkewProductSystem::slab_bounds() const {
    if (fiber_eigenvalue() <= 1)
        throw UnsupportedOrientationError(
            "slab bounds need fiber eigenvalue >= 2; orientation-reversing fibers would "
            "require analyzing the second iterate, which leaves this family");
    return slab_bounds_for(lift_deviation_bound(), fiber_eigenvalue());
}

std::pair<Int, Int> slab_bounds_for(const Rational& deviation, const Int& fiber_degree) {
    if (fiber_degree <= 1)
        throw UnsupportedOrientationError("slab bounds need fiber degree >= 2");
    Int k2 = ceil_int(deviation / Rational(fiber_degree - 1));
    return {Int(-k2), k2};
}

}  // namespace torustransit
