#pragma once

// The independent brute-force oracle: enumerate the multiplicatively closed
// set generated by arbitrary naturals > 1, test membership, and check interval
// emptiness. Generators need not be prime nor coprime; 1 belongs to every
// semigroup as the empty product.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace gapcert {

/// Ascending, duplicate-free list of generators, each >= 2.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<std::uint64_t> gens) {
        if (gens.empty()) throw degenerate_error("generator set must be nonempty");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (gens.front() < 2) throw degenerate_error("generators must be >= 2");
        gens_ = std::move(gens);
    }

    const std::vector<std::uint64_t>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

private:
    std::vector<std::uint64_t> gens_;
};

struct EnumerationBudget {
    std::uint64_t max_elements = 10'000'000;
};

namespace detail {

/// Streams the semigroup elements <= bound in ascending order, without
/// duplicates, into `emit` (return false to stop early). A min-heap holds one
/// cursor per generator into the list of elements produced so far; the heap
/// top is always the least candidate product. Throws enumeration_budget_error
/// once more than budget.max_elements have been emitted.
inline void for_each_element(const GeneratorSet& gens, const mpz_class& bound,
                             const EnumerationBudget& budget,
                             const std::function<bool(const mpz_class&)>& emit) {
    if (bound < 1) return;
    if (budget.max_elements == 0) throw enumeration_budget_error(0, 1);

    std::vector<mpz_class> produced{mpz_class(1)};
    if (!emit(produced.front())) return;
    std::uint64_t count = 1;

    struct Cursor {
        mpz_class candidate;  // gens[gen_pos] * produced[next]
        std::size_t gen_pos;
        std::size_t next;
    };
    const auto later = [](const Cursor& a, const Cursor& b) { return a.candidate > b.candidate; };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        mpz_class c(static_cast<unsigned long>(gens.gens()[g]));
        if (c <= bound) heap.push({std::move(c), g, 0});
    }

    while (!heap.empty()) {
        Cursor cur = heap.top();
        heap.pop();
        if (cur.candidate != produced.back()) {
            if (count == budget.max_elements) {
                throw enumeration_budget_error(budget.max_elements, count + 1);
            }
            produced.push_back(cur.candidate);
            ++count;
            if (!emit(produced.back())) return;
        }
        // Advance this generator's cursor; it dies once its products pass the
        // bound, since produced only ever grows upward.
        const std::size_t n = cur.next + 1;
        if (n < produced.size()) {
            mpz_class c = produced[n] * gens.gens()[cur.gen_pos];
            if (c <= bound) heap.push({std::move(c), cur.gen_pos, n});
        }
    }
}

}  // namespace detail

/// All semigroup elements <= bound, ascending, each exactly once, including 1.
inline std::vector<mpz_class> enumerate_upto(const GeneratorSet& gens, const mpz_class& bound,
                                             const EnumerationBudget& budget = {}) {
    if (bound < 1) throw out_of_range_error("enumerate_upto: bound must be >= 1");
    std::vector<mpz_class> out;
    detail::for_each_element(gens, bound, budget, [&](const mpz_class& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

/// Least semigroup element in the open interval (left, right), if any.
inline std::optional<mpz_class> first_element_inside(const GeneratorSet& gens,
                                                     const mpz_class& left, const mpz_class& right,
                                                     const EnumerationBudget& budget = {}) {
    if (!(left < right)) throw out_of_range_error("interval requires left < right");
    std::optional<mpz_class> found;
    detail::for_each_element(gens, right - 1, budget, [&](const mpz_class& v) {
        if (v > left) {
            found = v;
            return false;
        }
        return true;
    });
    return found;
}

/// True iff no semigroup element lies strictly between left and right.
inline bool interior_empty(const GeneratorSet& gens, const mpz_class& left, const mpz_class& right,
                           const EnumerationBudget& budget = {}) {
    return !first_element_inside(gens, left, right, budget).has_value();
}

/// One exponent assignment over the generators whose product is n, or absent.
/// Memoized recursive division search; generators are tried in ascending
/// order, so the returned vector is deterministic.
inline std::optional<std::vector<std::uint64_t>> is_member(const GeneratorSet& gens,
                                                           const mpz_class& n) {
    if (n < 1) return std::nullopt;
    std::vector<std::uint64_t> exps(gens.size(), 0);
    if (n == 1) return exps;
    std::set<mpz_class> dead_ends;
    const auto& g = gens.gens();
    std::function<bool(const mpz_class&)> search = [&](const mpz_class& m) {
        if (m == 1) return true;
        if (dead_ends.contains(m)) return false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (mpz_divisible_ui_p(m.get_mpz_t(), g[i])) {
                ++exps[i];
                mpz_class q = m / static_cast<unsigned long>(g[i]);
                if (search(q)) return true;
                --exps[i];
            }
        }
        dead_ends.insert(m);
        return false;
    };
    if (search(n)) return exps;
    return std::nullopt;
}

}  // namespace gapcert
