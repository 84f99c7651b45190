#include "torustransit/example_family.hpp"

#include "torustransit/errors.hpp"

namespace torustransit {

void validate(const ExampleParams& params) {
    if (params.dimension < 2) throw InvalidInput("family needs dimension >= 2");
    if (params.fiber_degree < 2) throw InvalidInput("family needs fiber degree >= 2");
    const Rational& l = params.contraction;
    if (!(l > Rational(1, 2) && l < 1))
        throw InvalidInput("contraction rate must lie strictly between 1/2 and 1");
}

Rational expansion_rate(const ExampleParams& params) {
    validate(params);
    const Rational& l = params.contraction;
    return Rational(2 * params.fiber_degree - 1) * l / (2 * l - 1);
}

PiecewiseLinearCircleMap contracting_expanding_map(const Int& k, const Rational& lambda) {
    validate(ExampleParams{2, k, lambda});
    const Rational split = 1 / (2 * lambda);
    return PiecewiseLinearCircleMap(QVec{Rational(0), split, Rational(1)},
                                    QVec{Rational(0), Rational(1, 2), Rational(k)});
}

namespace {

SkewProductSystem assemble(const ExampleParams& params, const Rational& first_value) {
    const size_t m = params.dimension - 1;
    const Rational quarter_shift = 1 / (4 * params.contraction);
    // Fiber map: the two-slope covering precomposed with t -> t + 1/(4 lambda)
    // and shifted down by 1/4, folded into breakpoint data. The contracting
    // arc then straddles t = 0 and the map fixes 0.
    QVec breakpoints{Rational(0), quarter_shift, 1 - quarter_shift, Rational(1)};
    QVec values{Rational(0), first_value, Rational(params.fiber_degree) - first_value,
                Rational(params.fiber_degree)};
    PiecewiseLinearCircleMap fiber(std::move(breakpoints), std::move(values));

    AffineBaseMap base(IMat::identity(m).scaled(Int(2)), QVec(m, Rational(0)));
    return SkewProductSystem(std::move(base), IVec(m, Int(1)), Rational(0), std::move(fiber));
}

}  // namespace

SkewProductSystem build_example(const ExampleParams& params) {
    validate(params);
    return assemble(params, Rational(1, 4));
}

SkewProductSystem build_nonconservative_example(const ExampleParams& params,
                                                const Rational& slope_delta) {
    validate(params);
    if (slope_delta == 0) throw InvalidInput("slope perturbation must be nonzero");
    const Rational perturbed = params.contraction + slope_delta;
    if (perturbed <= 0) throw InvalidInput("perturbed slope must stay positive");
    // First breakpoint value = perturbed slope times the piece length.
    const Rational first_value = perturbed / (4 * params.contraction);
    if (2 * first_value >= Rational(params.fiber_degree))
        throw InvalidInput("perturbation destroys monotonicity of the lift");
    return assemble(params, first_value);
}

bool IdentityReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

IdentityReport example_identities(const ExampleParams& params) {
    validate(params);
    const Rational& lambda = params.contraction;
    const Int& k = params.fiber_degree;
    const Rational eta = expansion_rate(params);
    const Rational split = 1 / (2 * lambda);
    const PiecewiseLinearCircleMap phi = contracting_expanding_map(k, lambda);
    const SkewProductSystem sys = build_example(params);

    IdentityReport report;
    auto add = [&report](std::string name, Rational lhs, Rational rhs) {
        bool ok = lhs == rhs;
        report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
    };
    add("expansion_rate", phi.slope(1), eta);
    add("reciprocal_slope_sum", 1 / lambda + Rational(2 * k - 1) / eta, Rational(2));
    add("lift_continuity", eta * (1 - split) + Rational(1, 2), Rational(k));
    add("contracting_piece_length", split, 1 / (2 * lambda));
    add("contracting_image_length", lambda * split, Rational(1, 2));
    add("shifted_map_fixes_zero", sys.fiber().lift_eval(Rational(0)), Rational(0));
    return report;
}

ContractionWitness contraction_witness(const ExampleParams& params) {
    validate(params);
    const size_t m = params.dimension - 1;
    const SkewProductSystem sys = build_example(params);
    const Rational quarter_shift = 1 / (4 * params.contraction);

    ContractionWitness w;
    w.fixed_point = QVec(m, Rational(0));
    w.interval_lo = -quarter_shift;
    w.interval_hi = quarter_shift;
    w.slope = params.contraction;

    if (sys.base().apply_torus(w.fixed_point) != w.fixed_point)
        throw Error("base map does not fix 0");
    if (sys.fiber().slope(0) != params.contraction ||
        sys.fiber().slope(sys.fiber().piece_count() - 1) != params.contraction)
        throw Error("fiber slope around 0 is not the contraction rate");
    return w;
}

std::optional<ExampleParams> recover_example_params(const SkewProductSystem& sys) {
    const size_t m = sys.dim() - 1;
    if (!sys.base().is_linear()) return std::nullopt;
    if (sys.base().matrix() != IMat::identity(m).scaled(Int(2))) return std::nullopt;
    for (const Int& c : sys.coupling())
        if (c != 1) return std::nullopt;
    if (sys.fiber_offset() != 0) return std::nullopt;
    if (sys.fiber().piece_count() != 3) return std::nullopt;

    ExampleParams params{sys.dim(), sys.fiber().signed_degree(), sys.fiber().slope(0)};
    try {
        validate(params);
        const SkewProductSystem rebuilt = build_example(params);
        if (rebuilt.fiber().breakpoints() == sys.fiber().breakpoints() &&
            rebuilt.fiber().lift_values() == sys.fiber().lift_values())
            return params;
    } catch (const InvalidInput&) {
    }
    return std::nullopt;
}

}  // namespace torustransit
