#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torustransit/skew_product.hpp"

namespace torustransit {

/// Parameters of the explicit volume-preserving family: doubling base
/// 2*Id on the (n-1)-torus with all-ones coupling, and a degree-k fiber
/// map with one contracting slope lambda in (1/2, 1) and one expanding
/// slope eta = (2k-1) lambda / (2 lambda - 1).
struct ExampleParams {
    size_t dimension;      // n >= 2
    Int fiber_degree;      // k >= 2
    Rational contraction;  // lambda
};

void validate(const ExampleParams& params);  // throws InvalidInput

Rational expansion_rate(const ExampleParams& params);

/// The raw two-slope degree-k covering: slope lambda on [0, 1/(2 lambda)],
/// slope eta on the rest, lift values {0, 1/2, k}.
PiecewiseLinearCircleMap contracting_expanding_map(const Int& k, const Rational& lambda);

/// The full skew product, with the fiber phase shift folded into the
/// breakpoint data so that 0 is a fixed point.
SkewProductSystem build_example(const ExampleParams& params);

/// Negative control: same breakpoints but the contracting slope moved to
/// lambda + slope_delta with no compensating change elsewhere, so the
/// reciprocal-Jacobian sum misses 1.
SkewProductSystem build_nonconservative_example(const ExampleParams& params,
                                                const Rational& slope_delta);

struct IdentityCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool ok;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_ok() const;
};

/// Exact verification of the defining identities of the family: the
/// expansion rate, the reciprocal-slope sum 1/lambda + (2k-1)/eta = 2,
/// lift continuity, and the length/image of the contracting piece.
IdentityReport example_identities(const ExampleParams& params);

struct ContractionWitness {
    QVec fixed_point;      // 0 in the base
    Rational interval_lo;  // lift coordinates around t = 0
    Rational interval_hi;
    Rational slope;        // the contracting slope on that interval
};

ContractionWitness contraction_witness(const ExampleParams& params);

/// Recognizes systems that are exactly build_example(params) for some
/// params; used to upgrade sampled conservativity to a symbolic proof.
std::optional<ExampleParams> recover_example_params(const SkewProductSystem& sys);

}  // namespace torustransit
