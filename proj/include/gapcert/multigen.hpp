#pragma once

// Minima sequences for three or more prime generators. With base p the largest
// prime, each interval (p^k, p^{k+1}) is searched for the least element of the
// sub-semigroup generated by the remaining primes; indices where the exact
// ratio m / p^k hits a strict new minimum are retained. Unlike the
// two-generator case, the retained index differences need not be monotone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "factored.hpp"
#include "semigroup.hpp"

namespace gapcert {

struct MinimaTerm {
    std::uint64_t k;
    std::vector<std::uint64_t> exponents;  ///< over the sub-generators, aligned
    FactoredInteger m;                     ///< least sub-semigroup element in (base^k, base^{k+1})
};

struct MinimaRecord {
    std::vector<std::uint64_t> sub_primes;
    std::uint64_t base_prime = 0;
    std::uint64_t k_max = 0;
    std::vector<MinimaTerm> terms;

    std::vector<std::uint64_t> k_differences() const {
        std::vector<std::uint64_t> d;
        for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
            d.push_back(terms[i + 1].k - terms[i].k);
        }
        return d;
    }
    bool differences_nondecreasing() const {
        const auto d = k_differences();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] < d[i]) return false;
        }
        return true;
    }
};

namespace detail {

/// Least element of the sub-generator semigroup strictly inside (lo, hi),
/// with its exponent vector, by recursion over exponents. Every generator but
/// the last is swept; the last is filled directly with the least power lifting
/// the partial product past lo. Throws once more than `budget` nodes are
/// visited.
struct IntervalSearch {
    const std::vector<std::uint64_t>& gens;
    const mpz_class& lo;
    const mpz_class& hi;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    std::optional<mpz_class> best;
    std::vector<std::uint64_t> best_exps;
    std::vector<std::uint64_t> exps;

    void run() {
        exps.assign(gens.size(), 0);
        descend(0, mpz_class(1));
    }

    void descend(std::size_t idx, const mpz_class& acc) {
        if (++nodes > budget) throw enumeration_budget_error(budget, nodes);
        if (idx + 1 == gens.size()) {
            mpz_class v = acc;
            std::uint64_t e = 0;
            while (v <= lo) {
                v *= gens[idx];
                ++e;
            }
            if (v < hi && (!best || v < *best)) {
                best = v;
                exps[idx] = e;
                best_exps = exps;
            }
            return;
        }
        mpz_class v = acc;
        for (std::uint64_t e = 0; v < hi; ++e) {
            exps[idx] = e;
            descend(idx + 1, v);
            v *= gens[idx];
        }
        exps[idx] = 0;
    }
};

}  // namespace detail

/// Minima sequence for >= 3 distinct ascending primes, the last of which is
/// the base. Intervals with no sub-semigroup element are skipped; retained
/// terms are the strict new minima of the exact ratio m / base^k, decided by
/// big-integer cross-multiplication.
inline MinimaRecord minima_sequence(const std::vector<std::uint64_t>& primes, std::uint64_t k_max,
                                    const EnumerationBudget& budget = {}) {
    if (primes.size() < 3) throw out_of_range_error("minima_sequence: needs >= 3 primes");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) {
            throw out_of_range_error("minima_sequence: " + std::to_string(primes[i]) + " is not prime");
        }
        if (i > 0 && primes[i] <= primes[i - 1]) {
            throw out_of_range_error("minima_sequence: primes must be strictly ascending");
        }
    }
    if (k_max > 4096) throw out_of_range_error("minima_sequence: k_max too large");

    MinimaRecord record;
    record.sub_primes.assign(primes.begin(), primes.end() - 1);
    record.base_prime = primes.back();
    record.k_max = k_max;

    mpz_class lo = 1;  // base^k
    std::optional<mpz_class> best_m;
    mpz_class best_pow;  // base^{k of the running minimum}
    std::uint64_t nodes_used = 0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        mpz_class hi = lo * record.base_prime;
        detail::IntervalSearch search{record.sub_primes, lo, hi, nodes_used,
                                      budget.max_elements, std::nullopt, {}, {}};
        search.run();
        nodes_used = search.nodes;
        if (search.best) {
            // strict new minimum of m / base^k: m * best_pow < best_m * base^k
            const bool retain = !best_m || (*search.best * best_pow < *best_m * lo);
            if (retain) {
                best_m = *search.best;
                best_pow = lo;
                std::vector<PrimePower> factors;
                for (std::size_t i = 0; i < record.sub_primes.size(); ++i) {
                    if (search.best_exps[i] > 0) {
                        factors.push_back({record.sub_primes[i], search.best_exps[i]});
                    }
                }
                record.terms.push_back(
                    {k, search.best_exps, FactoredInteger::from_factors(std::move(factors))});
            }
        }
        lo = hi;
    }
    return record;
}

}  // namespace gapcert
