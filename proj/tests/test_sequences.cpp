#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <gapcert/exact_compare.hpp>
#include <gapcert/projgeom.hpp>
#include <gapcert/sequences.hpp>

using namespace gapcert;

namespace {

// Independent oracle: naive modular scan with explicit multiplication.
std::vector<std::uint64_t> oracle_approx_inverses(std::uint64_t p, std::uint64_t q) {
    std::vector<std::uint64_t> out;
    unsigned __int128 best = q;
    for (std::uint64_t l = 0; l < q; ++l) {
        const std::uint64_t r =
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(l + 1) * p % q);
        if (r < best) {
            best = r;
            out.push_back(l + 1);
            if (r == 1) break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("approximate inverses on the documented cases") {
    CHECK(approximate_inverses(1, 7).inverses() == std::vector<std::uint64_t>{1});

    const auto r35 = approximate_inverses(3, 5);
    CHECK(r35.inverses() == std::vector<std::uint64_t>{1, 2});
    CHECK(r35.inverses() == oracle_approx_inverses(3, 5));
    CHECK(r35.final_inverse() == 2);  // 2 * 3 = 6 = 1 mod 5

    const auto flagship = approximate_inverses(190537, 301994);
    const auto inv = flagship.inverses();
    REQUIRE(inv.size() >= 8);
    CHECK(std::vector<std::uint64_t>(inv.begin(), inv.begin() + 8) ==
          std::vector<std::uint64_t>{1, 2, 5, 8, 27, 46, 65, 149});
    // The exact terminal inverse; the modular identity pins it.
    CHECK(flagship.final_inverse() == 125743);
    CHECK(static_cast<unsigned __int128>(125743) * 190537 % 301994 == 1);
}

TEST_CASE("approximate inverses reject bad input") {
    CHECK_THROWS_AS(approximate_inverses(6, 9), not_coprime_error);
    CHECK_THROWS_AS(approximate_inverses(5, 5), out_of_range_error);
    CHECK_THROWS_AS(approximate_inverses(0, 7), out_of_range_error);
    CHECK_THROWS_AS(approximate_inverses(7, 5), out_of_range_error);
}

TEST_CASE("approximate inverses: residues fall to 1, gaps widen") {
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<std::uint64_t> qd(2, 5000);
    int done = 0;
    while (done < 200) {
        const std::uint64_t q = qd(rng);
        const std::uint64_t p = rng() % (q - 1) + 1;
        if (std::gcd(p, q) != 1) continue;
        const auto record = approximate_inverses(p, q);
        const auto& steps = record.steps;
        REQUIRE_FALSE(steps.empty());
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            REQUIRE(steps[i].residue > steps[i + 1].residue);
        }
        REQUIRE(steps.back().residue == 1);
        // scan-index differences are nondecreasing (equality permitted)
        for (std::size_t i = 0; i + 2 < steps.size(); ++i) {
            const auto d1 = steps[i + 1].scan_index - steps[i].scan_index;
            const auto d2 = steps[i + 2].scan_index - steps[i + 1].scan_index;
            REQUIRE(d1 <= d2);
        }
        REQUIRE(static_cast<unsigned __int128>(record.final_inverse()) * p % q == 1);
        REQUIRE(record.inverses() == oracle_approx_inverses(p, q));
        ++done;
    }
}

TEST_CASE("stabilization sequence on the documented cases") {
    const auto single = stabilization_sequence(2, 3, 1);
    REQUIRE(single.terms.size() == 1);
    CHECK(single.terms[0].k == 1);
    CHECK(single.terms[0].x == 2);

    const auto record = stabilization_sequence(2, 3, 2000);
    std::vector<std::uint64_t> k, x;
    for (const auto& t : record.terms) {
        k.push_back(t.k);
        x.push_back(t.x);
    }
    CHECK(k == std::vector<std::uint64_t>{1, 3, 5, 17, 29, 41, 94, 147, 200, 253, 306, 971, 1636});
    CHECK(x == std::vector<std::uint64_t>{2, 5, 8, 27, 46, 65, 149, 233, 317, 401, 485, 1539, 2593});
}

TEST_CASE("stabilization sequence rejects degenerate or rational pairs") {
    CHECK_THROWS_AS(stabilization_sequence(1, 5, 10), degenerate_error);
    CHECK_THROWS_AS(stabilization_sequence(4, 8, 10), log_rational_pair_error);
    CHECK_THROWS_AS(stabilization_sequence(2, 4, 10), log_rational_pair_error);
    CHECK_THROWS_AS(stabilization_sequence(3, 2, 10), out_of_range_error);
}

TEST_CASE("stabilization terms bracket and strictly tighten") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 12) {
        const std::uint64_t p1 = rng() % 28 + 2;
        const std::uint64_t p2 = rng() % 28 + 2;
        if (p1 >= p2 || !is_irrational_pair(p1, p2)) continue;
        const auto record = stabilization_sequence(p1, p2, 400);
        REQUIRE(record.terms.size() >= 2);
        REQUIRE(record.terms.front().k == 1);
        for (const auto& t : record.terms) {
            // p2^k < p1^x < p2^{k+1}
            REQUIRE(compare_powers(p1, static_cast<std::int64_t>(t.x), p2,
                                   static_cast<std::int64_t>(t.k)) == std::strong_ordering::greater);
            REQUIRE(compare_powers(p1, static_cast<std::int64_t>(t.x), p2,
                                   static_cast<std::int64_t>(t.k + 1)) == std::strong_ordering::less);
        }
        for (std::size_t i = 0; i + 1 < record.terms.size(); ++i) {
            REQUIRE(record.terms[i].k < record.terms[i + 1].k);
            // the ratio p1^x / p2^k strictly decreases:
            // p1^{x_i - x_{i+1}} > p2^{k_i - k_{i+1}}
            REQUIRE(compare_fractional_excess(p1, p2, record.terms[i].x, record.terms[i].k,
                                              record.terms[i + 1].x, record.terms[i + 1].k) ==
                    std::strong_ordering::greater);
        }
        ++done;
    }
}

TEST_CASE("crosscheck of the two routes") {
    SECTION("two-term record has prefix at least 1") {
        const auto record = stabilization_sequence(2, 3, 3);
        REQUIRE(record.terms.size() == 2);
        const auto report = crosscheck_with_approx_inverses(record);
        CHECK(report.prefix_length >= 1);
    }
    SECTION("(2,3) record against its terminal convergent") {
        const auto record = stabilization_sequence(2, 3, 2000);
        const auto report = crosscheck_with_approx_inverses(record);
        CHECK(report.p == 1636);
        CHECK(report.q == 2593);
        CHECK(report.reduction_gcd == 1);
        CHECK(report.prefix_length >= record.terms.size() - 1);
    }
    SECTION("(2,5) record, both routes frozen") {
        const auto record = stabilization_sequence(2, 5, 500);
        std::vector<std::uint64_t> k, x;
        for (const auto& t : record.terms) {
            k.push_back(t.k);
            x.push_back(t.x);
        }
        CHECK(k == std::vector<std::uint64_t>{1, 2, 3, 31, 59, 205, 351, 497});
        CHECK(x == std::vector<std::uint64_t>{3, 5, 7, 72, 137, 476, 815, 1154});
        const auto report = crosscheck_with_approx_inverses(record);
        CHECK(report.p == 497);
        CHECK(report.q == 1154);
        CHECK(report.inverse_list == oracle_approx_inverses(497, 1154));
        CHECK(report.prefix_length == 7);  // everything except the final 1154
        CHECK_FALSE(report.mismatch_pos.has_value());
        CHECK(report.final_inverse == 815);
    }
    SECTION("requires two terms") {
        CHECK_THROWS_AS(crosscheck_with_approx_inverses(stabilization_sequence(2, 3, 1)),
                        out_of_range_error);
    }
}

TEST_CASE("crosscheck prefix covers all but the last term for random pairs") {
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 10) {
        const std::uint64_t p1 = rng() % 28 + 2;
        const std::uint64_t p2 = rng() % 28 + 2;
        if (p1 >= p2 || !is_irrational_pair(p1, p2)) continue;
        const auto record = stabilization_sequence(p1, p2, 300);
        if (record.terms.size() < 2) continue;
        const auto report = crosscheck_with_approx_inverses(record);
        REQUIRE(report.prefix_length >= record.terms.size() - 1);
        ++done;
    }
}
