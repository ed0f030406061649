#pragma once

// Gap certificates: claimed-empty open integer intervals in a finitely
// generated multiplicative semigroup, with exactly factored endpoints that
// themselves belong to the semigroup. Certificates store exponents, never
// expanded values; expansion happens only inside verification under budget.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "exact_compare.hpp"
#include "factored.hpp"
#include "projgeom.hpp"
#include "semigroup.hpp"
#include "sequences.hpp"

namespace gapcert {

enum class CertificateStatus { unverified, verified, refused, failed };

inline std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::unverified: return "unverified";
        case CertificateStatus::verified: return "verified";
        case CertificateStatus::refused: return "refused";
        case CertificateStatus::failed: return "failed";
    }
    return "unverified";
}

/// Open interval (left, right) = (p2^{k_j + t}, p1^{x_j} * p2^t) that contains
/// no element of <p1, p2>, for 0 <= t < k_{j+1} - k_j. Both endpoints are
/// members by construction and the width is at least p2^t.
struct GapCertificate {
    std::uint64_t p1 = 0, p2 = 0;  ///< generator pair, p1 < p2
    std::size_t j = 0;             ///< 1-based position in the stabilization record
    std::uint64_t t = 0;           ///< offset within the family
    FactoredInteger left;
    FactoredInteger right;
    FactoredInteger width_floor;   ///< p2^t
    CertificateStatus status = CertificateStatus::unverified;
};

/// Index cap for the stabilization scan behind gap construction.
struct ScanLimits {
    std::uint64_t max_index = std::uint64_t{1} << 21;
};

/// Gap certificates for the pair (g1, g2), normalized so p1 < p2. Scans until
/// `terms` stabilization terms are found (or the index cap is reached) and
/// emits, per consecutive pair of terms, the widest certificate
/// t = k_{j+1} - k_j - 1 -- or the whole family t = 0..k_{j+1} - k_j - 1 when
/// widest_only is false. A log-rational pair is refused: its gaps come from
/// the single generator found by reduce_generators instead.
inline std::vector<GapCertificate> gap_certificates(std::uint64_t g1, std::uint64_t g2,
                                                    std::size_t terms, bool widest_only = true,
                                                    const ScanLimits& limits = {}) {
    if (g1 < 2 || g2 < 2) throw degenerate_error("gap_certificates: generators must be >= 2");
    const std::uint64_t p1 = std::min(g1, g2), p2 = std::max(g1, g2);
    if (!is_irrational_pair(p1, p2)) {
        // Same projective point: p1 = f^u, p2 = f^v, so p1^v = p2^u exactly.
        const auto [pt1, u] = point_and_power(factor(p1));
        const auto v = point_and_power(factor(p2)).second;
        throw log_rational_pair_error(p1, v, p2, u);
    }
    if (terms < 2) return {};

    const FactoredInteger f1 = factor(p1), f2 = factor(p2);
    StabilizationScan scan(p1, p2);
    std::vector<StabilizationTerm> found;
    while (found.size() < terms) {
        auto term = scan.next_term(limits.max_index);
        if (!term) break;
        found.push_back(*term);
    }

    std::vector<GapCertificate> certs;
    for (std::size_t j = 0; j + 1 < found.size(); ++j) {
        const std::uint64_t spread = found[j + 1].k - found[j].k;
        const std::uint64_t t_lo = widest_only ? spread - 1 : 0;
        for (std::uint64_t t = t_lo; t < spread; ++t) {
            GapCertificate c;
            c.p1 = p1;
            c.p2 = p2;
            c.j = j + 1;
            c.t = t;
            c.left = f2.pow(found[j].k + t);
            c.right = f1.pow(found[j].x).times(f2.pow(t));
            c.width_floor = f2.pow(t);
            certs.push_back(std::move(c));
        }
    }
    return certs;
}

/// Consecutive-power interval (base^j, base^{j+1}); trivially empty inside a
/// singly generated semigroup, with width base^j * (base - 1).
struct PowerGap {
    std::uint64_t base = 0;
    std::uint64_t j = 0;
    FactoredInteger left;
    FactoredInteger right;
    CertificateStatus status = CertificateStatus::unverified;
};

inline std::vector<PowerGap> consecutive_power_gaps(std::uint64_t base, std::size_t count) {
    if (base < 2) throw degenerate_error("consecutive_power_gaps: base must be >= 2");
    const FactoredInteger f = factor(base);
    std::vector<PowerGap> gaps;
    gaps.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        gaps.push_back({base, j, f.pow(j), f.pow(j + 1), CertificateStatus::unverified});
    }
    return gaps;
}

/// Gap of width at least min_width, by the exponent-alignment route: raise
/// every generator to the least power reaching min_width. The left endpoint is
/// kept in generator-exponent form because the next element's factorization is
/// not known; the claim is only that (left, left + min_width) is empty.
struct MinWidthGap {
    std::vector<std::uint64_t> generators;  ///< ascending
    std::vector<std::uint64_t> exponents;   ///< aligned with generators
    std::uint64_t min_width = 0;
    CertificateStatus status = CertificateStatus::unverified;

    mpz_class left_value() const {
        mpz_class v = 1, pw;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            mpz_ui_pow_ui(pw.get_mpz_t(), generators[i], exponents[i]);
            v *= pw;
        }
        return v;
    }
    std::string left_str() const {
        std::string s;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (!s.empty()) s += '*';
            s += std::to_string(generators[i]);
            if (exponents[i] != 1) s += '^' + std::to_string(exponents[i]);
        }
        return s.empty() ? "1" : s;
    }
};

inline MinWidthGap gap_of_min_width(const GeneratorSet& gens, std::uint64_t min_width) {
    if (min_width < 1) throw out_of_range_error("gap_of_min_width: width must be >= 1");
    MinWidthGap gap;
    gap.generators = gens.gens();
    gap.min_width = min_width;
    for (std::uint64_t g : gens.gens()) {
        // least e with g^e >= min_width, exact through the comparison kernel
        std::uint64_t e = 0;
        if (min_width >= 2) {
            e = 1;
            while (compare_powers(g, static_cast<std::int64_t>(e), min_width, 1) ==
                   std::strong_ordering::less) {
                ++e;
            }
        }
        gap.exponents.push_back(e);
    }
    return gap;
}

// ---- verification against the enumeration oracle --------------------------

struct VerifyBudget {
    std::uint64_t max_elements = 10'000'000;
    mpz_class max_endpoint = mpz_class(1) << 63;
};

struct VerifyOutcome {
    CertificateStatus status = CertificateStatus::unverified;
    std::string reason;                      ///< set when refused
    std::optional<mpz_class> counterexample; ///< set when failed
};

/// Checks that the open interval (left, right) contains no element of the
/// semigroup. Refused (never Failed) when the endpoint or the element count
/// exceeds the budget: verification must not falsely reject a true claim.
inline VerifyOutcome verify_interval(const GeneratorSet& gens, const mpz_class& left,
                                     const mpz_class& right, const VerifyBudget& budget = {}) {
    if (!(left < right)) throw out_of_range_error("verify_interval: requires left < right");
    if (right > budget.max_endpoint) {
        return {CertificateStatus::refused,
                "right endpoint exceeds the verification budget of " + budget.max_endpoint.get_str(),
                std::nullopt};
    }
    try {
        auto inside = first_element_inside(gens, left, right, {budget.max_elements});
        if (inside) return {CertificateStatus::failed, "", std::move(inside)};
        return {CertificateStatus::verified, "", std::nullopt};
    } catch (const enumeration_budget_error& e) {
        return {CertificateStatus::refused, e.what(), std::nullopt};
    }
}

namespace detail {

/// Endpoint small enough to expand under the budget? Uses a double log2
/// precheck so that astronomically large certificates never get expanded.
inline std::optional<mpz_class> endpoint_within(const FactoredInteger& f, const mpz_class& cap) {
    const double bits = f.log2_value();
    if (bits > static_cast<double>(mpz_sizeinbase(cap.get_mpz_t(), 2)) + 2) return std::nullopt;
    mpz_class v = f.value();
    if (v > cap) return std::nullopt;
    return v;
}

}  // namespace detail

/// Verifies a pair certificate's interval against an arbitrary generator set;
/// gaps of a superset semigroup are gaps of any subset, so certificates from a
/// reduced pair may be checked against the original generators.
inline VerifyOutcome verify_certificate_against(const GeneratorSet& gens, const GapCertificate& cert,
                                                const VerifyBudget& budget = {}) {
    auto right = detail::endpoint_within(cert.right, budget.max_endpoint);
    if (!right) {
        return {CertificateStatus::refused,
                "right endpoint " + cert.right.str() + " exceeds the verification budget",
                std::nullopt};
    }
    return verify_interval(gens, cert.left.value(), *right, budget);
}

inline VerifyOutcome verify_certificate(const GapCertificate& cert, const VerifyBudget& budget = {}) {
    return verify_certificate_against(GeneratorSet({cert.p1, cert.p2}), cert, budget);
}

inline VerifyOutcome verify_power_gap(const PowerGap& gap, const VerifyBudget& budget = {}) {
    auto right = detail::endpoint_within(gap.right, budget.max_endpoint);
    if (!right) {
        return {CertificateStatus::refused,
                "right endpoint " + gap.right.str() + " exceeds the verification budget",
                std::nullopt};
    }
    const GeneratorSet gens({gap.base});
    return verify_interval(gens, gap.left.value(), *right, budget);
}

inline VerifyOutcome verify_min_width_gap(const MinWidthGap& gap, const VerifyBudget& budget = {}) {
    const mpz_class left = gap.left_value();
    const mpz_class right = left + gap.min_width;
    if (right > budget.max_endpoint) {
        return {CertificateStatus::refused,
                "right endpoint " + right.get_str() + " exceeds the verification budget",
                std::nullopt};
    }
    const GeneratorSet gens(gap.generators);
    return verify_interval(gens, left, right, budget);
}

/// Exact check of the width-floor claim value(right) - value(left) >= p2^t:
/// by expansion when the endpoints are word-sized, and through the comparison
/// kernel otherwise. Since left = p2^{k+t} and right = p1^x * p2^t, the
/// difference is p2^t * (p1^x - p2^k), so the floor holds exactly when
/// p1^x > p2^k.
inline bool width_floor_holds(const GapCertificate& cert) {
    if (cert.right.log2_value() < 62) {
        return cert.right.value() - cert.left.value() >= cert.width_floor.value();
    }
    const FactoredInteger p1f = factor(cert.p1);
    const FactoredInteger p2f = factor(cert.p2);
    // k from the p2-power left endpoint: its leading exponent is (k+t) times
    // p2's leading exponent.
    const std::uint64_t k_plus_t = cert.left.factors().front().exponent /
                                   p2f.factors().front().exponent;
    const std::uint64_t k = k_plus_t - cert.t;
    // x from the right endpoint through p1's leading prime.
    const std::uint64_t lead = p1f.factors().front().prime;
    std::uint64_t in_right = 0;
    for (const auto& [p, e] : cert.right.factors()) {
        if (p == lead) in_right = e;
    }
    std::uint64_t from_p2 = 0;
    for (const auto& [p, e] : p2f.factors()) {
        if (p == lead) from_p2 = e * cert.t;
    }
    const std::uint64_t x = (in_right - from_p2) / p1f.factors().front().exponent;
    return compare_powers(cert.p1, static_cast<std::int64_t>(x), cert.p2,
                          static_cast<std::int64_t>(k)) == std::strong_ordering::greater;
}

// ---- reduction pipeline ----------------------------------------------------

/// Gaps for an arbitrary generator set, through reduction to at most two
/// generators. Gaps of the reduced superset are gaps of the original set.
struct ReducedGaps {
    ReductionResult reduction;
    std::vector<GapCertificate> pair_gaps;  ///< DoublyClosed outcome
    std::vector<PowerGap> power_gaps;       ///< SinglePoint outcome
};

inline ReducedGaps gaps_for_generators(const std::vector<std::uint64_t>& gens, std::size_t terms,
                                       bool widest_only = true, const ScanLimits& limits = {}) {
    ReducedGaps out{reduce_generators(gens), {}, {}};
    if (const auto* sp = std::get_if<SinglePoint>(&out.reduction.classification)) {
        const mpz_class root = sp->root.value();
        if (!root.fits_ulong_p()) throw out_of_range_error("root exceeds the machine word");
        out.power_gaps = consecutive_power_gaps(root.get_ui(), terms);
        return out;
    }
    if (const auto* dc = std::get_if<DoublyClosed>(&out.reduction.classification)) {
        const mpz_class q1 = dc->q1.value(), q2 = dc->q2.value();
        if (!q1.fits_ulong_p() || !q2.fits_ulong_p()) {
            throw out_of_range_error("reduced pair exceeds the machine word");
        }
        out.pair_gaps = gap_certificates(q1.get_ui(), q2.get_ui(), terms, widest_only, limits);
        return out;
    }
    if (std::holds_alternative<HigherRank>(out.reduction.classification)) {
        throw not_reducible_error("generators span rank >= 3; no reduction to two generators");
    }
    throw not_reducible_error("the generators' line is not doubly multiplicatively closed");
}

}  // namespace gapcert
