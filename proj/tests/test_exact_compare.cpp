#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include <gapcert/exact_compare.hpp>

using namespace gapcert;

namespace {

// Independent oracle: a^ea vs b^eb as exact rationals, by shifting both
// exponents non-negative and comparing big integers. Never touches the ladder.
std::strong_ordering oracle_compare(std::uint64_t a, std::int64_t ea, std::uint64_t b,
                                    std::int64_t eb) {
    const std::int64_t shift = std::max({std::int64_t{0}, -ea, -eb});
    mpz_class lhs, rhs, fa, fb;
    mpz_ui_pow_ui(lhs.get_mpz_t(), a, static_cast<unsigned long>(ea + shift));
    mpz_ui_pow_ui(fb.get_mpz_t(), b, static_cast<unsigned long>(shift));
    lhs *= fb;
    mpz_ui_pow_ui(rhs.get_mpz_t(), b, static_cast<unsigned long>(eb + shift));
    mpz_ui_pow_ui(fa.get_mpz_t(), a, static_cast<unsigned long>(shift));
    rhs *= fa;
    const int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::uint64_t brute_least_dominating(std::uint64_t p1, std::uint64_t p2, std::uint64_t i) {
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), p2, i);
    mpz_class pw = 1;
    std::uint64_t x = 0;
    while (pw <= target) {
        pw *= static_cast<unsigned long>(p1);
        ++x;
    }
    return x;
}

}  // namespace

TEST_CASE("compare_powers on the documented cases") {
    CHECK(compare_powers(2, 3, 3, 2) == std::strong_ordering::less);   // 8 < 9
    CHECK(compare_powers(2, 0, 3, 0) == std::strong_ordering::equal);  // 1 = 1
    // big-integer expansion: 2^19 = 524288 < 531441 = 3^12
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), 2, 19);
    mpz_ui_pow_ui(b.get_mpz_t(), 3, 12);
    REQUIRE(a.get_str() == "524288");
    REQUIRE(b.get_str() == "531441");
    CHECK(compare_powers(2, 19, 3, 12) == std::strong_ordering::less);
}

TEST_CASE("compare_powers matches the big-integer oracle exhaustively") {
    for (std::uint64_t a = 2; a <= 10; ++a) {
        for (std::uint64_t b = 2; b <= 10; ++b) {
            for (std::int64_t ea = -20; ea <= 20; ++ea) {
                for (std::int64_t eb = -20; eb <= 20; ++eb) {
                    REQUIRE(compare_powers(a, ea, b, eb) == oracle_compare(a, ea, b, eb));
                }
            }
        }
    }
}

TEST_CASE("compare_powers survives near-ties that defeat doubles") {
    // Deep continued-fraction convergents of log_2(3) put the two sides within
    // ~1e-8 in log scale, inside the double phase's error gate, so these only
    // resolve through the directed-rounding intervals. Expected signs frozen
    // from exact big-integer expansion.
    CHECK(compare_powers(3, 190537, 2, 301994) == oracle_compare(3, 190537, 2, 301994));
    CHECK(compare_powers(3, 10781274, 2, 17087915) == std::strong_ordering::less);
    CHECK(compare_powers(2, 17087915, 3, 10781274) == std::strong_ordering::greater);
    CHECK(compare_powers(3, 53715833, 2, 85137581) == std::strong_ordering::greater);
    CHECK(compare_powers(3, 171928773, 2, 272500658) == std::strong_ordering::less);
}

TEST_CASE("exact equality routes through the big-integer fallback") {
    CHECK(compare_powers(4, 3, 8, 2) == std::strong_ordering::equal);    // 64 = 64
    CHECK(compare_powers(2, 6, 8, 2) == std::strong_ordering::equal);    // 64 = 64
    CHECK(compare_powers(6, 2, 36, 1) == std::strong_ordering::equal);   // 36 = 36
    CHECK(compare_powers(4, -3, 8, -2) == std::strong_ordering::equal);  // 1/64 = 1/64
    CHECK(compare_powers(10, 600, 1000, 200) == std::strong_ordering::equal);
}

TEST_CASE("compare_powers ordering is antisymmetric and transitive on samples") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::uint64_t> base(2, 40);
    std::uniform_int_distribution<std::int64_t> exp(-300, 300);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t a = base(rng), b = base(rng), c = base(rng);
        const std::int64_t ea = exp(rng), eb = exp(rng), ec = exp(rng);
        const auto ab = compare_powers(a, ea, b, eb);
        const auto ba = compare_powers(b, eb, a, ea);
        if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
        if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
        if (ab == std::strong_ordering::equal) CHECK(ba == std::strong_ordering::equal);
        const auto bc = compare_powers(b, eb, c, ec);
        const auto ac = compare_powers(a, ea, c, ec);
        if (ab == std::strong_ordering::less && bc == std::strong_ordering::less) {
            CHECK(ac == std::strong_ordering::less);
        }
        if (ab == std::strong_ordering::greater && bc == std::strong_ordering::greater) {
            CHECK(ac == std::strong_ordering::greater);
        }
        if (ab == std::strong_ordering::equal && bc == std::strong_ordering::equal) {
            CHECK(ac == std::strong_ordering::equal);
        }
    }
}

TEST_CASE("least_dominating_exponent on the documented cases") {
    CHECK(least_dominating_exponent(2, 3, 1) == 2);
    CHECK(least_dominating_exponent(2, 3, 17) == 27);
    CHECK(least_dominating_exponent(2, 3, 3) == brute_least_dominating(2, 3, 3));
    CHECK(least_dominating_exponent(2, 3, 3) == 5);  // 2^4 = 16 < 27 <= 32 = 2^5
}

TEST_CASE("least_dominating_exponent brackets exactly for random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> base(2, 30);
    std::uniform_int_distribution<std::uint64_t> index(1, 200);
    int checked = 0;
    while (checked < 120) {
        std::uint64_t p1 = base(rng), p2 = base(rng);
        if (p1 >= p2) continue;
        const std::uint64_t i = index(rng);
        std::uint64_t x = 0;
        try {
            x = least_dominating_exponent(p1, p2, i);
        } catch (const log_rational_pair_error&) {
            // exact tie: must be reproducible by the oracle as equality
            bool tie = false;
            for (std::uint64_t e = 1; e <= brute_least_dominating(p1, p2, i); ++e) {
                tie = tie || oracle_compare(p1, static_cast<std::int64_t>(e), p2,
                                            static_cast<std::int64_t>(i)) ==
                                 std::strong_ordering::equal;
            }
            CHECK(tie);
            ++checked;
            continue;
        }
        CHECK(x == brute_least_dominating(p1, p2, i));
        // p2^i < p1^x and p1^{x-1} < p2^i, through the kernel itself
        CHECK(compare_powers(p1, static_cast<std::int64_t>(x), p2, static_cast<std::int64_t>(i)) ==
              std::strong_ordering::greater);
        CHECK(compare_powers(p1, static_cast<std::int64_t>(x - 1), p2,
                             static_cast<std::int64_t>(i)) == std::strong_ordering::less);
        ++checked;
    }
}

TEST_CASE("least_dominating_exponent ignores bad hints") {
    CHECK(least_dominating_exponent(2, 3, 17, 1) == 27);
    CHECK(least_dominating_exponent(2, 3, 17, 27) == 27);
    CHECK(least_dominating_exponent(2, 3, 17, 1000) == 27);
}

TEST_CASE("least_dominating_exponent raises on a log-rational pair") {
    // 4^3 = 64 = 8^2
    CHECK_THROWS_AS(least_dominating_exponent(4, 8, 2), log_rational_pair_error);
    CHECK_THROWS_AS(least_dominating_exponent(2, 4, 5), log_rational_pair_error);
}

TEST_CASE("compare_fractional_excess on the documented cases") {
    // identical pairs tie
    CHECK(compare_fractional_excess(2, 3, 5, 3, 5, 3) == std::strong_ordering::equal);
    // z_1 > z_3 for (2,3): the excess strictly decreases along retained terms
    CHECK(compare_fractional_excess(2, 3, 2, 1, 5, 3) == std::strong_ordering::greater);
    // (5,3) vs (8,5) reduces to compare_powers(2,-3,3,-2): 1/8 vs 1/9
    CHECK(compare_fractional_excess(2, 3, 5, 3, 8, 5) == compare_powers(2, -3, 3, -2));
    CHECK(compare_fractional_excess(2, 3, 5, 3, 8, 5) == std::strong_ordering::greater);
    CHECK(compare_powers(2, -3, 3, -2) == oracle_compare(2, -3, 3, -2));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(compare_powers(1, 2, 3, 2), out_of_range_error);
    CHECK_THROWS_AS(compare_powers(2, 2, 0, 2), out_of_range_error);
    CHECK_THROWS_AS(least_dominating_exponent(1, 3, 1), degenerate_error);
    CHECK_THROWS_AS(least_dominating_exponent(3, 3, 1), out_of_range_error);
    CHECK_THROWS_AS(least_dominating_exponent(2, 3, 0), out_of_range_error);
}
