#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapcert {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// p and q are not coprime where the operation requires gcd(p, q) = 1.
class not_coprime_error : public error {
public:
    not_coprime_error(std::uint64_t p, std::uint64_t q)
        : error("not coprime: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1"),
          p(p), q(q) {}
    std::uint64_t p, q;
};

/// An argument is outside the operation's admissible range.
class out_of_range_error : public error {
public:
    explicit out_of_range_error(const std::string& what) : error(what) {}
};

/// An exact power tie p1^x = p2^y was found: log_{p1}(p2) is rational and the
/// requested construction does not apply to the pair.
class log_rational_pair_error : public error {
public:
    log_rational_pair_error(std::uint64_t p1, std::uint64_t x, std::uint64_t p2, std::uint64_t y)
        : error("log-rational pair: " + std::to_string(p1) + "^" + std::to_string(x) + " = " +
                std::to_string(p2) + "^" + std::to_string(y)),
          p1(p1), p2(p2), x(x), y(y) {}
    std::uint64_t p1, p2, x, y;
};

/// A generator or base is 0 or 1 where a value >= 2 is required.
class degenerate_error : public error {
public:
    explicit degenerate_error(const std::string& what) : error(what) {}
};

/// The value exceeds the configured factoring bound; the caller must supply a
/// factored form instead.
class factoring_bound_error : public error {
public:
    explicit factoring_bound_error(const std::string& what) : error(what) {}
};

/// Enumeration would exceed the configured budget. Carries the count reached
/// when the budget tripped; the true size is at least this estimate.
class enumeration_budget_error : public error {
public:
    enumeration_budget_error(std::uint64_t budget, std::uint64_t estimate)
        : error("enumeration budget of " + std::to_string(budget) +
                " elements exceeded (at least " + std::to_string(estimate) + " needed)"),
          budget(budget), estimate(estimate) {}
    std::uint64_t budget, estimate;
};

/// n = 1 carries the zero exponent vector and has no projective point.
class unit_has_no_point_error : public error {
public:
    unit_has_no_point_error() : error("1 has no projective point") {}
};

/// The generator set does not reduce to at most two generators, so no gap
/// construction is available for it.
class not_reducible_error : public error {
public:
    explicit not_reducible_error(const std::string& what) : error(what) {}
};

/// Internal consistency failure: a classification promised representability
/// but the exponent solve failed. Indicates a bug, never expected.
class membership_failure_error : public error {
public:
    explicit membership_failure_error(const std::string& what) : error(what) {}
};

}  // namespace gapcert
