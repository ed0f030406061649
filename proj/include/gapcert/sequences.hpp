#pragma once

// Two independently computed sequences and their mutual check.
//
// approximate_inverses(p, q): scan l = 0..q-1 and record every strict new
// minimum of ((l+1)*p) mod q. The recorded values l+1 are the approximate
// inverses of p mod q; the scan ends when the residue reaches 1, i.e. at the
// true modular inverse.
//
// stabilization_sequence(p1, p2, max_index): for g = log_{p2}(p1) < 1 and
// x(k) the least exponent with p1^x > p2^k, the fractional excess
// z_k = x(k)*g - k lies in (0,1). Indices where z hits a strict new minimum
// form the stabilization sequence of the pair; all decisions are made through
// the exact-comparison kernel, never floating point alone.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "exact_compare.hpp"
#include "errors.hpp"

namespace gapcert {

struct ApproxInverseStep {
    std::uint64_t multiplier_q;  ///< how many multiples of q were passed (j)
    std::uint64_t scan_index;    ///< the index l of the new-minimum step
    std::uint64_t inverse;       ///< l + 1, the approximate inverse
    std::uint64_t residue;       ///< ((l+1)*p) mod q, strictly decreasing to 1
};

struct ApproxInverseRecord {
    std::uint64_t p = 0, q = 0;
    std::vector<ApproxInverseStep> steps;

    std::vector<std::uint64_t> inverses() const {
        std::vector<std::uint64_t> out;
        out.reserve(steps.size());
        for (const auto& s : steps) out.push_back(s.inverse);
        return out;
    }
    /// The exact modular inverse of p mod q (final recorded step).
    std::uint64_t final_inverse() const { return steps.back().inverse; }
};

/// Approximate-inverse sequence of p mod q. Requires gcd(p, q) = 1 and
/// 1 <= p < q. Runs in O(q) with machine-word arithmetic.
inline ApproxInverseRecord approximate_inverses(std::uint64_t p, std::uint64_t q) {
    if (p == 0 || p >= q) throw out_of_range_error("approximate_inverses: requires 1 <= p < q");
    if (std::gcd(p, q) != 1) throw not_coprime_error(p, q);

    ApproxInverseRecord record{p, q, {}};
    std::uint64_t residue = 0;
    std::uint64_t passed = 0;  // multiples of q passed so far
    std::uint64_t best = q;    // any residue beats this
    for (std::uint64_t l = 0; l < q; ++l) {
        residue += p;  // no overflow: residue < q and p < q <= 2^63 handled below
        if (residue >= q || residue < p) {
            residue -= q;
            ++passed;
        }
        if (residue < best) {
            best = residue;
            record.steps.push_back({passed, l, l + 1, residue});
            if (residue == 1) break;
        }
    }
    return record;
}

struct StabilizationTerm {
    std::uint64_t k;  ///< index where the fractional excess hits a strict new minimum
    std::uint64_t x;  ///< least exponent with p1^x > p2^k
};

struct StabilizationRecord {
    std::uint64_t p1 = 0, p2 = 0;  ///< p1 < p2
    std::uint64_t max_index = 0;   ///< scan bound actually covered
    std::vector<StabilizationTerm> terms;
};

/// Incremental scan producing stabilization terms on demand. Carries the
/// running minimum, so a single scan is sequential; distinct scans are
/// independent.
class StabilizationScan {
public:
    StabilizationScan(std::uint64_t p1, std::uint64_t p2) : p1_(p1), p2_(p2) {
        if (p1 < 2) throw degenerate_error("stabilization scan requires p1 >= 2");
        if (p1 >= p2) throw out_of_range_error("stabilization scan requires p1 < p2");
    }

    /// Advances the scan until the next retained term, or until the index
    /// would pass `index_cap` (inclusive). Returns the term, or nullopt when
    /// the cap is reached first.
    std::optional<StabilizationTerm> next_term(std::uint64_t index_cap) {
        while (index_ < index_cap) {
            ++index_;
            x_ = least_dominating_exponent(p1_, p2_, index_, x_);
            if (!have_min_) {
                have_min_ = true;
                min_ = {index_, x_};
                return min_;
            }
            const auto c = compare_fractional_excess(p1_, p2_, x_, index_, min_.x, min_.k);
            if (c == std::strong_ordering::equal) {
                // z_i = z_min exactly forces p1^dx = p2^dk: the pair is log-rational.
                throw log_rational_pair_error(p1_, x_ - min_.x, p2_, index_ - min_.k);
            }
            if (c == std::strong_ordering::less) {
                min_ = {index_, x_};
                return min_;
            }
        }
        return std::nullopt;
    }

    std::uint64_t index() const { return index_; }
    std::uint64_t p1() const { return p1_; }
    std::uint64_t p2() const { return p2_; }

private:
    std::uint64_t p1_, p2_;
    std::uint64_t index_ = 0;
    std::uint64_t x_ = 1;
    bool have_min_ = false;
    StabilizationTerm min_{};
};

/// All retained terms with k <= max_index. The first term is always k = 1.
inline StabilizationRecord stabilization_sequence(std::uint64_t p1, std::uint64_t p2,
                                                  std::uint64_t max_index) {
    if (max_index < 1) throw out_of_range_error("stabilization_sequence: max_index must be >= 1");
    StabilizationScan scan(p1, p2);
    StabilizationRecord record{p1, p2, max_index, {}};
    while (auto term = scan.next_term(max_index)) record.terms.push_back(*term);
    return record;
}

/// Result of replaying the record's terminal convergent through the
/// approximate-inverse route and matching the two lists.
struct CrosscheckReport {
    std::uint64_t p = 0, q = 0;        ///< reduced terminal convergent k_J / x_J
    std::uint64_t reduction_gcd = 1;   ///< 1 when the convergent was already coprime
    std::vector<std::uint64_t> inverse_list;   ///< from approximate_inverses (leading 1 included)
    std::size_t prefix_length = 0;     ///< common prefix of inverse_list[1:] and the x list
    std::optional<std::size_t> mismatch_pos;   ///< first differing position, if both lists reach it
    std::uint64_t final_inverse = 0;   ///< exact modular inverse of p mod q

    std::string describe() const {
        std::string s = "crosscheck " + std::to_string(p) + "/" + std::to_string(q) +
                        ": prefix length " + std::to_string(prefix_length);
        if (reduction_gcd != 1) s += " (convergent reduced by " + std::to_string(reduction_gcd) + ")";
        if (mismatch_pos) {
            s += ", mismatch at position " + std::to_string(*mismatch_pos);
        } else {
            s += ", no mismatch before a list ended";
        }
        s += ", final inverse " + std::to_string(final_inverse);
        return s;
    }
};

/// Runs approximate_inverses on the record's terminal convergent (reduced to
/// lowest terms) and reports the longest common prefix between its inverse
/// list with the leading 1 dropped and the record's x list.
inline CrosscheckReport crosscheck_with_approx_inverses(const StabilizationRecord& record) {
    if (record.terms.size() < 2) {
        throw out_of_range_error("crosscheck requires a record with at least 2 terms");
    }
    const auto& last = record.terms.back();
    const std::uint64_t g = std::gcd(last.k, last.x);
    CrosscheckReport report;
    report.reduction_gcd = g;
    report.p = last.k / g;
    report.q = last.x / g;

    const auto inv = approximate_inverses(report.p, report.q);
    report.inverse_list = inv.inverses();
    report.final_inverse = inv.final_inverse();

    const std::size_t n = std::min(report.inverse_list.size() - 1, record.terms.size());
    std::size_t match = 0;
    while (match < n && report.inverse_list[match + 1] == record.terms[match].x) ++match;
    report.prefix_length = match;
    if (match < n) report.mismatch_pos = match;
    return report;
}

}  // namespace gapcert
