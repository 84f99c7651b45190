#include "torustransit/certifier.hpp"

#include <numeric>

#include <json.hpp>

#include "torustransit/errors.hpp"
#include "torustransit/example_family.hpp"
#include "torustransit/rng.hpp"

namespace torustransit {

std::string rule_name(Rule rule) {
    switch (rule) {
        case Rule::InvertibleBase: return "invertible_base";
        case Rule::DegreeDomination: return "degree_domination";
        case Rule::NormDomination: return "norm_domination";
        case Rule::DiagonalizableLinearPart: return "diagonalizable_linear_part";
        case Rule::TransverseHyperplane: return "transverse_hyperplane";
        case Rule::None: return "none";
    }
    return "none";
}

BaseTransitivityResult base_transitivity(const AffineBaseMap& base) {
    if (!base.is_linear())
        return {BaseStatus::Unknown,
                "affine translation present; no linear criterion applies"};
    const IPoly chi = char_poly(base.matrix());
    if (no_root_of_unity_eigenvalue(chi))
        return {BaseStatus::Proved, "no eigenvalue is a root of unity"};

    // Finite-order refutation: strip cyclotomic factors; if nothing else
    // remains and the matrix is diagonalizable, some power is the identity.
    if (base.degree() == 1) {
        const long d = chi.degree();
        const unsigned long bound =
            2 * static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 1;
        IPoly work = chi;
        unsigned long order = 1;
        for (unsigned long m = 1; m <= bound; ++m) {
            if (euler_phi(m) > static_cast<unsigned long>(d)) continue;
            const IPoly phi_m = cyclotomic(m);
            IPoly quotient;
            while (work.degree() >= phi_m.degree() &&
                   ipoly_divide_monic(work, phi_m, &quotient)) {
                work = quotient;
                order = std::lcm(order, m);
            }
        }
        if (work.degree() == 0 && is_diagonalizable(base.matrix())) {
            if (matrix_power(base.matrix(), order) == IMat::identity(base.dim()))
                return {BaseStatus::Refuted,
                        "matrix has finite order " + std::to_string(order)};
        }
    }
    return {BaseStatus::Unknown,
            "a root-of-unity eigenvalue blocks the linear criterion"};
}

namespace {

// A fixed prime denominator keeps sample points off the breakpoint set;
// degenerate hits are detected exactly and redrawn regardless.
Int pick_sample_denominator(const SkewProductSystem& sys) {
    Int lcm_den = 1;
    auto absorb = [&lcm_den](const Rational& q) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    };
    for (const auto& q : sys.fiber().breakpoints()) absorb(q);
    for (const auto& q : sys.fiber().lift_values()) absorb(q);
    for (const auto& q : sys.base().translation()) absorb(q);
    absorb(sys.fiber_offset());
    for (unsigned long p : {1000003ul, 1000033ul, 1000037ul, 1000039ul}) {
        if (!mpz_divisible_ui_p(lcm_den.get_mpz_t(), p)) return Int(p);
    }
    return Int(1000081ul);
}

}  // namespace

VolumeCheckResult verify_volume_preservation(const SkewProductSystem& sys, long samples,
                                             uint64_t seed) {
    if (samples <= 0) throw InvalidInput("sample count must be positive");
    VolumeCheckResult result;
    if (auto params = recover_example_params(sys))
        result.symbolic = example_identities(*params).all_ok();

    const Int den = pick_sample_denominator(sys);
    const uint64_t den_ul = den.get_ui();
    SplitMix64 rng(seed);
    for (long i = 0; i < samples; ++i) {
        while (true) {
            QVec p(sys.dim());
            for (auto& coord : p) coord = make_rational(Int(rng.below(den_ul)), den);
            std::vector<SkewProductSystem::Preimage> pre;
            try {
                pre = sys.preimages(p);
            } catch (const DegeneratePointError&) {
                continue;  // resample, never skip
            }
            Rational sum = 0;
            for (const auto& q : pre) sum += 1 / q.jacobian;
            if (sum != 1) {
                result.ok = false;
                result.samples = i;
                result.symbolic = false;
                result.witness = p;
                result.witness_sum = sum;
                return result;
            }
            break;
        }
    }
    result.ok = true;
    result.samples = samples;
    return result;
}

Certificate certify(const SkewProductSystem& sys, const Assumptions& assumptions) {
    Certificate cert;
    cert.assumptions = assumptions;

    if (assumptions.volume_preserving == VolumeStatus::Unknown)
        cert.failures.push_back({"prerequisites", "volume preservation not established"});
    if (assumptions.base_transitive == BaseStatus::Refuted)
        cert.failures.push_back({"prerequisites", "base map is not transitive"});
    else if (assumptions.base_transitive == BaseStatus::Unknown)
        cert.failures.push_back({"prerequisites", "base transitivity not established"});
    if (!cert.failures.empty()) return cert;

    const Int deg_g = sys.fiber_degree();
    const Int deg_h = sys.base_degree();
    const Int det_h = sys.base().determinant();
    const IMat a_f = sys.linear_part();

    if (deg_g >= 2 && (det_h == 1 || det_h == -1)) {
        cert.verdict = Verdict::Transitive;
        cert.rule = Rule::InvertibleBase;
        cert.evidence.base_determinant = det_h;
        cert.evidence.fiber_degree = deg_g;
        cert.failures.clear();
        return cert;
    }
    cert.failures.push_back({rule_name(Rule::InvertibleBase),
                             deg_g < 2 ? "fiber degree below 2"
                                       : "base map is not invertible (|det| != 1)"});

    if (deg_h >= 1 && deg_h < deg_g) {
        cert.verdict = Verdict::Transitive;
        cert.rule = Rule::DegreeDomination;
        cert.evidence.base_degree = deg_h;
        cert.evidence.fiber_degree = deg_g;
        cert.failures.clear();
        return cert;
    }
    cert.failures.push_back({rule_name(Rule::DegreeDomination),
                             "base degree " + deg_h.get_str() +
                                 " does not stay below fiber degree " + deg_g.get_str()});

    if (deg_g > 1) {
        const IMat gram =
            sys.base().matrix().transpose() * sys.base().matrix() -
            IMat::identity(sys.base().dim()).scaled(deg_g * deg_g);
        if (positive_definite(gram)) {
            cert.verdict = Verdict::Transitive;
            cert.rule = Rule::NormDomination;
            cert.evidence.principal_minors = leading_principal_minors(gram);
            cert.evidence.fiber_degree = deg_g;
            cert.failures.clear();
            return cert;
        }
        cert.failures.push_back({rule_name(Rule::NormDomination),
                                 "A^T A - deg(fiber)^2 Id is not positive definite"});
    } else {
        cert.failures.push_back({rule_name(Rule::NormDomination), "fiber degree below 2"});
    }

    if (deg_g > 1 && is_diagonalizable(a_f)) {
        cert.verdict = Verdict::Transitive;
        cert.rule = Rule::DiagonalizableLinearPart;
        cert.evidence.minimal_poly = minimal_polynomial(a_f);
        cert.failures.clear();
        return cert;
    }
    cert.failures.push_back({rule_name(Rule::DiagonalizableLinearPart),
                             deg_g > 1 ? "linear part is not diagonalizable over Q"
                                       : "fiber degree below 2"});

    if (deg_g >= 2) {
        if (auto witness = transverse_invariant_hyperplane(a_f, sys.fiber_eigenvalue())) {
            cert.verdict = Verdict::Transitive;
            cert.rule = Rule::TransverseHyperplane;
            cert.evidence.hyperplane_witness = witness;
            cert.evidence.fiber_eigenvalue = sys.fiber_eigenvalue();
            cert.failures.clear();
            return cert;
        }
        cert.failures.push_back(
            {rule_name(Rule::TransverseHyperplane),
             "no left eigenvector for the fiber eigenvalue has nonzero last coordinate"});
    } else {
        cert.failures.push_back({rule_name(Rule::TransverseHyperplane), "fiber degree below 2"});
    }

    return cert;
}

namespace {

const char* volume_status_name(VolumeStatus s) {
    switch (s) {
        case VolumeStatus::VerifiedExact: return "verified_exact";
        case VolumeStatus::Declared: return "declared";
        case VolumeStatus::Unknown: return "unknown";
    }
    return "unknown";
}

const char* base_status_name(BaseStatus s) {
    switch (s) {
        case BaseStatus::Proved: return "proved";
        case BaseStatus::Declared: return "declared";
        case BaseStatus::Refuted: return "refuted";
        case BaseStatus::Unknown: return "unknown";
    }
    return "unknown";
}

nlohmann::ordered_json qvec_json(const QVec& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& q : v) arr.push_back(format_rational(q));
    return arr;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["verdict"] = cert.verdict == Verdict::Transitive ? "transitive" : "inconclusive";
    j["rule"] = rule_name(cert.rule);

    nlohmann::ordered_json ev = nlohmann::ordered_json::object();
    if (cert.evidence.base_determinant) ev["base_determinant"] = cert.evidence.base_determinant->get_str();
    if (cert.evidence.base_degree) ev["base_degree"] = cert.evidence.base_degree->get_str();
    if (cert.evidence.fiber_degree) ev["fiber_degree"] = cert.evidence.fiber_degree->get_str();
    if (cert.evidence.fiber_eigenvalue)
        ev["fiber_eigenvalue"] = cert.evidence.fiber_eigenvalue->get_str();
    if (cert.evidence.principal_minors) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& m : *cert.evidence.principal_minors) arr.push_back(m.get_str());
        ev["principal_minors"] = arr;
    }
    if (cert.evidence.minimal_poly) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& q : cert.evidence.minimal_poly->c) arr.push_back(format_rational(q));
        ev["minimal_polynomial"] = arr;
    }
    if (cert.evidence.hyperplane_witness)
        ev["hyperplane_witness"] = qvec_json(*cert.evidence.hyperplane_witness);
    j["evidence"] = ev;

    nlohmann::ordered_json as;
    as["volume_preserving"] = volume_status_name(cert.assumptions.volume_preserving);
    as["volume_samples"] = cert.assumptions.volume_samples;
    as["volume_symbolic"] = cert.assumptions.volume_symbolic;
    as["base_transitive"] = base_status_name(cert.assumptions.base_transitive);
    as["base_detail"] = cert.assumptions.base_detail;
    j["assumptions"] = as;

    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : cert.failures) {
        nlohmann::ordered_json entry;
        entry["rule"] = f.rule;
        entry["reason"] = f.reason;
        fails.push_back(entry);
    }
    j["failures"] = fails;
    return j.dump(2);
}

}  // namespace torustransit
