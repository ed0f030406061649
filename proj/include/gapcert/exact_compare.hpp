#pragma once

// Exact-arithmetic kernel for sign questions about integer linear forms in two
// logarithms. Every comparison of base_a^exp_a against base_b^exp_b is resolved
// through a precision ladder: hardware doubles with a rigorous error bound,
// then directed-rounding MPFR intervals of doubling precision, and finally an
// exact big-integer power comparison. The returned ordering is always exact.

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "errors.hpp"

namespace gapcert {

namespace detail {

/// Owning wrapper for a single mpfr_t.
class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    MpfrValue(MpfrValue&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }
    MpfrValue& operator=(MpfrValue&&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

/// Enclosure lo <= ln(base) <= hi at a fixed working precision.
struct LogBounds {
    MpfrValue lo, hi;
};

/// Directed-rounding bounds for ln(base), cached per (base, precision).
inline const LogBounds& log_bounds(std::uint64_t base, mpfr_prec_t prec) {
    thread_local std::map<std::pair<std::uint64_t, mpfr_prec_t>, LogBounds> cache;
    if (cache.size() > 256) cache.clear();
    auto it = cache.find({base, prec});
    if (it == cache.end()) {
        LogBounds b{MpfrValue(prec), MpfrValue(prec)};
        MpfrValue x(prec);
        mpfr_set_ui(x.get(), base, MPFR_RNDN);  // exact for word-sized base
        mpfr_log(b.lo.get(), x.get(), MPFR_RNDD);
        mpfr_log(b.hi.get(), x.get(), MPFR_RNDU);
        it = cache.emplace(std::pair{base, prec}, std::move(b)).first;
    }
    return it->second;
}

/// Double-precision attempt at sign(exp_a*ln(a) - exp_b*ln(b)). The error
/// bound is deliberately loose (2^-48 relative per side); anything inside it
/// escalates to intervals.
inline std::optional<std::strong_ordering> compare_by_double(std::uint64_t base_a,
                                                             std::uint64_t exp_a,
                                                             std::uint64_t base_b,
                                                             std::uint64_t exp_b) {
    constexpr std::uint64_t kMaxExactDouble = std::uint64_t{1} << 52;
    if (exp_a > kMaxExactDouble || exp_b > kMaxExactDouble) return std::nullopt;
    const double lhs = static_cast<double>(exp_a) * std::log(static_cast<double>(base_a));
    const double rhs = static_cast<double>(exp_b) * std::log(static_cast<double>(base_b));
    const double err = (lhs + rhs) * 0x1p-48 + 0x1p-200;
    const double diff = lhs - rhs;
    if (diff > err) return std::strong_ordering::greater;
    if (diff < -err) return std::strong_ordering::less;
    return std::nullopt;
}

/// Interval attempt at the same sign, at the given working precision.
inline std::optional<std::strong_ordering> compare_by_interval(std::uint64_t base_a,
                                                               std::uint64_t exp_a,
                                                               std::uint64_t base_b,
                                                               std::uint64_t exp_b,
                                                               mpfr_prec_t prec) {
    const LogBounds& la = log_bounds(base_a, prec);
    const LogBounds& lb = log_bounds(base_b, prec);
    MpfrValue a_lo(prec), a_hi(prec), b_lo(prec), b_hi(prec);
    mpfr_mul_ui(a_lo.get(), la.lo.get(), exp_a, MPFR_RNDD);
    mpfr_mul_ui(a_hi.get(), la.hi.get(), exp_a, MPFR_RNDU);
    mpfr_mul_ui(b_lo.get(), lb.lo.get(), exp_b, MPFR_RNDD);
    mpfr_mul_ui(b_hi.get(), lb.hi.get(), exp_b, MPFR_RNDU);
    if (mpfr_cmp(a_lo.get(), b_hi.get()) > 0) return std::strong_ordering::greater;
    if (mpfr_cmp(a_hi.get(), b_lo.get()) < 0) return std::strong_ordering::less;
    return std::nullopt;
}

/// Exact big-integer comparison of base_a^exp_a vs base_b^exp_b.
inline std::strong_ordering compare_exact(std::uint64_t base_a, std::uint64_t exp_a,
                                          std::uint64_t base_b, std::uint64_t exp_b) {
    mpz_class pa, pb;
    mpz_ui_pow_ui(pa.get_mpz_t(), base_a, exp_a);
    mpz_ui_pow_ui(pb.get_mpz_t(), base_b, exp_b);
    const int c = cmp(pa, pb);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Ladder for base_a^exp_a vs base_b^exp_b with both exponents non-negative.
inline std::strong_ordering compare_powers_nonneg(std::uint64_t base_a, std::uint64_t exp_a,
                                                  std::uint64_t base_b, std::uint64_t exp_b) {
    if (exp_a == 0 && exp_b == 0) return std::strong_ordering::equal;
    if (exp_a == 0) return std::strong_ordering::less;
    if (exp_b == 0) return std::strong_ordering::greater;
    if (base_a == base_b) return exp_a <=> exp_b;

    if (auto r = compare_by_double(base_a, exp_a, base_b, exp_b)) return *r;

    // Bits of the larger side; intervals beyond that cannot beat going exact.
    const double bits = std::max(static_cast<double>(exp_a) * std::log2(static_cast<double>(base_a)),
                                 static_cast<double>(exp_b) * std::log2(static_cast<double>(base_b)));
    const double exact_bits = bits + 64;
    for (mpfr_prec_t prec = 256; static_cast<double>(prec) < exact_bits; prec *= 2) {
        if (auto r = compare_by_interval(base_a, exp_a, base_b, exp_b, prec)) return *r;
    }
    if (exact_bits > 0x1p31) {
        throw out_of_range_error("power comparison operands too large for exact fallback");
    }
    return compare_exact(base_a, exp_a, base_b, exp_b);
}

}  // namespace detail

/// Exact ordering of base_a^exp_a versus base_b^exp_b as positive rationals.
/// Negative exponents are permitted and interpreted as reciprocals; they are
/// handled by moving the factor across the comparison, so the ladder only ever
/// sees non-negative exponents. Total for bases >= 2.
inline std::strong_ordering compare_powers(std::uint64_t base_a, std::int64_t exp_a,
                                           std::uint64_t base_b, std::int64_t exp_b) {
    if (base_a < 2 || base_b < 2) throw out_of_range_error("compare_powers: bases must be >= 2");

    const int sign_a = (exp_a > 0) - (exp_a < 0);
    const int sign_b = (exp_b > 0) - (exp_b < 0);
    if (sign_a != sign_b) return sign_a <=> sign_b;
    if (sign_a == 0) return std::strong_ordering::equal;

    const auto mag = [](std::int64_t e) { return static_cast<std::uint64_t>(e < 0 ? -e : e); };
    if (sign_a > 0) return detail::compare_powers_nonneg(base_a, mag(exp_a), base_b, mag(exp_b));
    // Both sides below 1: compare reciprocals with the order swapped.
    return detail::compare_powers_nonneg(base_b, mag(exp_b), base_a, mag(exp_a));
}

/// Least x with p1^x > p2^index. Requires 2 <= p1 < p2 and index >= 1; the
/// float-derived guess is corrected by compare_powers until bracketed exactly,
/// so the result does not depend on the guess. An exact tie p1^x = p2^index
/// proves log-rationality of the pair and raises log_rational_pair_error.
/// `hint` may carry any known lower bound for the result (e.g. the value at a
/// smaller index).
inline std::uint64_t least_dominating_exponent(std::uint64_t p1, std::uint64_t p2,
                                               std::uint64_t index, std::uint64_t hint = 1) {
    if (p1 < 2) throw degenerate_error("least_dominating_exponent: p1 must be >= 2");
    if (p1 >= p2) throw out_of_range_error("least_dominating_exponent: requires p1 < p2");
    if (index == 0) throw out_of_range_error("least_dominating_exponent: index must be >= 1");
    constexpr std::uint64_t kMaxIndex = std::uint64_t{1} << 61;
    if (index > kMaxIndex) throw out_of_range_error("least_dominating_exponent: index too large");

    const double guess_d = std::ceil(static_cast<double>(index) *
                                     std::log(static_cast<double>(p2)) /
                                     std::log(static_cast<double>(p1)));
    std::uint64_t x = hint < 1 ? 1 : hint;
    if (guess_d > static_cast<double>(x) && guess_d < 0x1p62) {
        x = static_cast<std::uint64_t>(guess_d);
    }

    const auto cmp_at = [&](std::uint64_t e) {
        return compare_powers(p1, static_cast<std::int64_t>(e), p2, static_cast<std::int64_t>(index));
    };

    auto c = cmp_at(x);
    if (c == std::strong_ordering::equal) throw log_rational_pair_error(p1, x, p2, index);
    if (c == std::strong_ordering::less) {
        do {
            ++x;
            c = cmp_at(x);
            if (c == std::strong_ordering::equal) throw log_rational_pair_error(p1, x, p2, index);
        } while (c == std::strong_ordering::less);
        return x;
    }
    while (x > 1) {
        const auto below = cmp_at(x - 1);
        if (below == std::strong_ordering::equal) throw log_rational_pair_error(p1, x - 1, p2, index);
        if (below == std::strong_ordering::less) break;
        --x;
    }
    return x;
}

/// Ordering of the fractional excesses z_a = x_a*g - i_a versus
/// z_b = x_b*g - i_b for g = log_{p2}(p1). Computed exactly as the power
/// comparison p1^(x_a - x_b) vs p2^(i_a - i_b).
inline std::strong_ordering compare_fractional_excess(std::uint64_t p1, std::uint64_t p2,
                                                      std::uint64_t x_a, std::uint64_t i_a,
                                                      std::uint64_t x_b, std::uint64_t i_b) {
    constexpr std::uint64_t kMax = std::uint64_t{1} << 62;
    if (x_a > kMax || x_b > kMax || i_a > kMax || i_b > kMax) {
        throw out_of_range_error("compare_fractional_excess: operand too large");
    }
    const std::int64_t dx = static_cast<std::int64_t>(x_a) - static_cast<std::int64_t>(x_b);
    const std::int64_t di = static_cast<std::int64_t>(i_a) - static_cast<std::int64_t>(i_b);
    if (dx == 0 && di == 0) return std::strong_ordering::equal;
    return compare_powers(p1, dx, p2, di);
}

}  // namespace gapcert
