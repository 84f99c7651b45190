#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torustransit/polynomial.hpp"
#include "torustransit/skew_product.hpp"

namespace torustransit {

enum class Verdict { Transitive, Inconclusive };

/// Sufficient conditions tried in order of increasing cost; the names
/// describe the exact test each one runs on the linear data.
enum class Rule {
    InvertibleBase,            // |det A| = 1 and fiber degree >= 2
    DegreeDomination,          // 1 <= deg(base) < deg(fiber)
    NormDomination,            // A^T A - deg(fiber)^2 Id positive definite
    DiagonalizableLinearPart,  // squarefree minimal polynomial
    TransverseHyperplane,      // left eigenvector with nonzero last coordinate
    None,
};

std::string rule_name(Rule rule);

enum class VolumeStatus { VerifiedExact, Declared, Unknown };
enum class BaseStatus { Proved, Declared, Refuted, Unknown };

struct Assumptions {
    VolumeStatus volume_preserving = VolumeStatus::Unknown;
    BaseStatus base_transitive = BaseStatus::Unknown;
    long volume_samples = 0;    // provenance when VerifiedExact came from sampling
    bool volume_symbolic = false;  // family identities upgraded the check to a proof
    std::string base_detail;
};

struct Evidence {
    std::optional<Int> base_determinant;
    std::optional<Int> base_degree;
    std::optional<Int> fiber_degree;
    std::optional<Int> fiber_eigenvalue;
    std::optional<std::vector<Int>> principal_minors;
    std::optional<QPoly> minimal_poly;
    std::optional<QVec> hyperplane_witness;
};

struct RuleFailure {
    std::string rule;
    std::string reason;
};

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    Rule rule = Rule::None;
    Evidence evidence;
    Assumptions assumptions;
    std::vector<RuleFailure> failures;
};

struct BaseTransitivityResult {
    BaseStatus status;
    std::string reason;
};

/// Classifies a linear base map: transitive iff no eigenvalue is a root
/// of unity; refuted when the matrix has finite order (so some iterate
/// is the identity). Affine translations are reported Unknown.
BaseTransitivityResult base_transitivity(const AffineBaseMap& base);

struct VolumeCheckResult {
    bool ok = false;
    long samples = 0;
    bool symbolic = false;  // exact family identities, not just sampling
    std::optional<QVec> witness;
    std::optional<Rational> witness_sum;
};

/// Checks sum(1/J) = 1 exactly over the preimages of `samples` random
/// rational points. Degenerate draws are resampled, never skipped.
VolumeCheckResult verify_volume_preservation(const SkewProductSystem& sys, long samples,
                                             uint64_t seed);

/// Applies the rules in fixed order under the stated assumptions and
/// returns the first that fires, or per-rule failure reasons.
Certificate certify(const SkewProductSystem& sys, const Assumptions& assumptions);

/// Stable-field-order JSON; identical inputs serialize byte-for-byte.
std::string certificate_to_json(const Certificate& cert);

}  // namespace torustransit
