#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <gapcert/factored.hpp>
#include <gapcert/semigroup.hpp>

using namespace gapcert;

namespace {

// Independent membership oracle: repeated division greedy over all orderings
// is wrong for non-coprime generators, so use a direct bounded BFS instead.
bool oracle_member(const std::vector<std::uint64_t>& gens, const mpz_class& n) {
    if (n == 1) return true;
    std::vector<mpz_class> layer{mpz_class(1)};
    std::set<mpz_class> seen{mpz_class(1)};
    while (!layer.empty()) {
        std::vector<mpz_class> next;
        for (const auto& v : layer) {
            for (auto g : gens) {
                mpz_class w = v * static_cast<unsigned long>(g);
                if (w == n) return true;
                if (w < n && seen.insert(w).second) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    return false;
}

}  // namespace

TEST_CASE("factor on the documented cases") {
    CHECK(factor(12).factors() == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factor(1).factors().empty());
    CHECK(factor(45).factors() == std::vector<PrimePower>{{3, 2}, {5, 1}});
    CHECK(factor(20).factors() == std::vector<PrimePower>{{2, 2}, {5, 1}});
    CHECK(factor(30).factors() == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
}

TEST_CASE("factor round-trips on random factored integers") {
    std::mt19937_64 rng(11);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 9973, 1000003};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PrimePower> parts;
        std::uint64_t count = rng() % 4 + 1;
        std::vector<std::uint64_t> chosen;
        while (chosen.size() < count) {
            std::uint64_t p = primes[rng() % std::size(primes)];
            if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) chosen.push_back(p);
        }
        std::sort(chosen.begin(), chosen.end());
        for (auto p : chosen) parts.push_back({p, rng() % 5 + 1});
        const auto f = FactoredInteger::from_factors(parts);
        if (f.log2_value() > 62) continue;
        CHECK(factor(f.value()) == f);
    }
}

TEST_CASE("factor handles large prime cofactors") {
    // 2^61 - 1 is prime
    const mpz_class m = (mpz_class(1) << 61) - 1;
    const auto f = factor(m * 4);
    CHECK(f.factors() == std::vector<PrimePower>{{2, 2}, {m.get_ui(), 1}});
    CHECK_THROWS_AS(factor(mpz_class(1) << 64), factoring_bound_error);
    CHECK_THROWS_AS(factor(mpz_class(0)), out_of_range_error);
}

TEST_CASE("factored-string grammar is bit-exact") {
    CHECK(factor(96).str() == "2^5*3");
    CHECK(FactoredInteger::from_factors({{3, 16}}).str() == "3^16");
    CHECK(factor(1).str() == "1");
    CHECK(factor(30).str() == "2*3*5");
    CHECK(FactoredInteger::parse("2^5*3") == factor(96));
    CHECK(FactoredInteger::parse("1") == factor(1));
    CHECK(FactoredInteger::parse("2*3*5") == factor(30));
    CHECK_THROWS_AS(FactoredInteger::parse("3*2"), out_of_range_error);    // descending
    CHECK_THROWS_AS(FactoredInteger::parse("4^2"), out_of_range_error);    // composite
    CHECK_THROWS_AS(FactoredInteger::parse("2^0"), out_of_range_error);    // zero exponent
    CHECK_THROWS_AS(FactoredInteger::parse("2^"), out_of_range_error);
    CHECK_THROWS_AS(FactoredInteger::parse(""), out_of_range_error);
    CHECK_THROWS_AS(FactoredInteger::parse("2**3"), out_of_range_error);
}

TEST_CASE("parse/str round-trip on random factored integers") {
    std::mt19937_64 rng(12);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<PrimePower> parts;
        for (std::uint64_t p : primes) {
            if (rng() % 3 == 0) parts.push_back({p, rng() % 2000 + 1});
        }
        const auto f = FactoredInteger::from_factors(parts);
        CHECK(FactoredInteger::parse(f.str()) == f);
    }
}

TEST_CASE("is_prime spot checks") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));          // Carmichael
    CHECK(is_prime(1000003));
    CHECK(is_prime((1ull << 61) - 1));
    CHECK_FALSE(is_prime((1ull << 62)));
}

TEST_CASE("generator sets validate and normalize") {
    const GeneratorSet g({3, 2, 3, 45});
    CHECK(g.gens() == std::vector<std::uint64_t>{2, 3, 45});
    CHECK_THROWS_AS(GeneratorSet({}), degenerate_error);
    CHECK_THROWS_AS(GeneratorSet({0, 2}), degenerate_error);
    CHECK_THROWS_AS(GeneratorSet({1}), degenerate_error);
}

TEST_CASE("enumerate_upto on the documented cases") {
    const auto to_vals = [](const std::vector<mpz_class>& v) {
        std::vector<std::uint64_t> out;
        for (const auto& m : v) out.push_back(m.get_ui());
        return out;
    };
    CHECK(to_vals(enumerate_upto(GeneratorSet({2, 3}), 20)) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
    CHECK(to_vals(enumerate_upto(GeneratorSet({5}), 30)) == std::vector<std::uint64_t>{1, 5, 25});
    CHECK(to_vals(enumerate_upto(GeneratorSet({45, 20}), 1000)) ==
          std::vector<std::uint64_t>{1, 20, 45, 400, 900});
}

TEST_CASE("enumerate_upto agrees with the membership filter") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::uint64_t> gens;
        const std::size_t count = rng() % 4 + 1;
        for (std::size_t i = 0; i < count; ++i) gens.push_back(rng() % 49 + 2);
        const GeneratorSet gs(gens);
        const std::uint64_t bound = rng() % 10000 + 1;
        const auto elements = enumerate_upto(gs, bound);
        // strictly increasing, duplicate-free
        for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
            REQUIRE(elements[i] < elements[i + 1]);
        }
        // two routes agree: ascending enumeration vs division search over 1..N
        std::size_t at = 0;
        for (std::uint64_t n = 1; n <= bound; ++n) {
            const bool enumerated = at < elements.size() && elements[at] == n;
            if (enumerated) ++at;
            REQUIRE(enumerated == is_member(gs, n).has_value());
        }
        REQUIRE(at == elements.size());
    }
}

TEST_CASE("enumeration budget refuses instead of truncating") {
    CHECK_THROWS_AS(enumerate_upto(GeneratorSet({2, 3}), 1000, EnumerationBudget{10}),
                    enumeration_budget_error);
    try {
        enumerate_upto(GeneratorSet({2}), 1 << 20, EnumerationBudget{5});
        FAIL("expected budget error");
    } catch (const enumeration_budget_error& e) {
        CHECK(e.budget == 5);
        CHECK(e.estimate >= 5);
    }
}

TEST_CASE("is_member on the documented cases") {
    const GeneratorSet g4520({45, 20});
    const auto w = is_member(g4520, 900);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<std::uint64_t>{1, 1});  // 900 = 20 * 45, generators ascending
    CHECK(mpz_class(20) * 45 == 900);
    CHECK_FALSE(is_member(g4520, 30).has_value());
    const auto one = is_member(GeneratorSet({7}), 1);
    REQUIRE(one.has_value());
    CHECK(*one == std::vector<std::uint64_t>{0});
}

TEST_CASE("is_member witnesses reconstruct the value") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint64_t> gens;
        const std::size_t count = rng() % 3 + 1;
        for (std::size_t i = 0; i < count; ++i) gens.push_back(rng() % 30 + 2);
        const GeneratorSet gs(gens);
        const mpz_class n(rng() % 5000 + 1);
        const auto witness = is_member(gs, n);
        CHECK(witness.has_value() == oracle_member(gs.gens(), n));
        if (witness) {
            mpz_class v = 1, pw;
            for (std::size_t i = 0; i < gs.size(); ++i) {
                mpz_ui_pow_ui(pw.get_mpz_t(), gs.gens()[i], (*witness)[i]);
                v *= pw;
            }
            CHECK(v == n);
        }
    }
}

TEST_CASE("interior emptiness on the documented cases") {
    const GeneratorSet g23({2, 3});
    CHECK(interior_empty(g23, 9, 12));
    CHECK(interior_empty(g23, 8, 9));
    CHECK_FALSE(interior_empty(g23, 80, 100));  // 81 and 96 inside
    const auto inside = first_element_inside(g23, 80, 100);
    REQUIRE(inside.has_value());
    CHECK(*inside == 81);
}
