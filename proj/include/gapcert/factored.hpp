#pragma once

// Natural numbers held as ascending lists of (prime, exponent) pairs, plus the
// trial-division factoring front end and the factored-string grammar used by
// the JSON and CLI surfaces: `1` or `p^e` terms joined by `*`, primes
// ascending, exponent omitted when 1 (e.g. `2^5*3`, `3^16`).

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace gapcert {

/// Deterministic Miller-Rabin primality for 64-bit values.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    const auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    const auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        for (a %= m; e; e >>= 1) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This base set decides primality for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

struct PrimePower {
    std::uint64_t prime;
    std::uint64_t exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A natural number as its exact prime factorization. The empty list denotes 1.
class FactoredInteger {
public:
    FactoredInteger() = default;

    static FactoredInteger one() { return FactoredInteger{}; }

    /// Builds from an explicit factor list; validates ascending certified
    /// primes with exponents >= 1.
    static FactoredInteger from_factors(std::vector<PrimePower> factors) {
        std::uint64_t prev = 0;
        for (const auto& [p, e] : factors) {
            if (p <= prev) throw out_of_range_error("factors must have strictly ascending primes");
            if (e == 0) throw out_of_range_error("factor exponents must be >= 1");
            if (!is_prime(p)) throw out_of_range_error(std::to_string(p) + " is not prime");
            prev = p;
        }
        FactoredInteger f;
        f.factors_ = std::move(factors);
        return f;
    }

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    /// Expands to the exact value. Cost grows with the exponents; callers that
    /// only need a size estimate should use log2_value().
    mpz_class value() const {
        mpz_class v = 1, pw;
        for (const auto& [p, e] : factors_) {
            mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
            v *= pw;
        }
        return v;
    }

    /// log2 of the value, in doubles. Approximate; for budget prechecks only.
    double log2_value() const {
        double b = 0.0;
        for (const auto& [p, e] : factors_) {
            b += static_cast<double>(e) * std::log2(static_cast<double>(p));
        }
        return b;
    }

    /// Product with another factored integer (exponents merge).
    FactoredInteger times(const FactoredInteger& other) const {
        std::vector<PrimePower> out;
        out.reserve(factors_.size() + other.factors_.size());
        auto a = factors_.begin(), b = other.factors_.begin();
        while (a != factors_.end() || b != other.factors_.end()) {
            if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
                out.push_back(*a++);
            } else if (a == factors_.end() || b->prime < a->prime) {
                out.push_back(*b++);
            } else {
                out.push_back({a->prime, a->exponent + b->exponent});
                ++a, ++b;
            }
        }
        FactoredInteger f;
        f.factors_ = std::move(out);
        return f;
    }

    /// e-th power; pow(0) is 1.
    FactoredInteger pow(std::uint64_t e) const {
        if (e == 0) return one();
        FactoredInteger f;
        f.factors_ = factors_;
        for (auto& pp : f.factors_) pp.exponent *= e;
        return f;
    }

    /// Renders the bit-exact factored-string form.
    std::string str() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& [p, e] : factors_) {
            if (!s.empty()) s += '*';
            s += std::to_string(p);
            if (e != 1) {
                s += '^';
                s += std::to_string(e);
            }
        }
        return s;
    }

    /// Parses the factored-string grammar; inverse of str().
    static FactoredInteger parse(std::string_view text) {
        if (text == "1") return one();
        std::vector<PrimePower> factors;
        std::size_t pos = 0;
        const auto read_u64 = [&]() {
            if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
                throw out_of_range_error("bad factored string: \"" + std::string(text) + "\"");
            }
            std::uint64_t v = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                ++pos;
            }
            return v;
        };
        while (true) {
            const std::uint64_t p = read_u64();
            std::uint64_t e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = read_u64();
            }
            factors.push_back({p, e});
            if (pos == text.size()) break;
            if (text[pos] != '*') {
                throw out_of_range_error("bad factored string: \"" + std::string(text) + "\"");
            }
            ++pos;
        }
        return from_factors(std::move(factors));
    }

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::vector<PrimePower> factors_;
};

/// Exact factorization by trial division with a mod-30 wheel. The default
/// bound of 2^64 marks the supported range; beyond it the caller must supply
/// the factored form.
inline FactoredInteger factor(const mpz_class& n) {
    if (n < 1) throw out_of_range_error("factor: argument must be >= 1");
    if (!n.fits_ulong_p()) {
        throw factoring_bound_error("factor: " + n.get_str() + " exceeds the 2^64 factoring bound");
    }
    std::uint64_t m = n.get_ui();
    std::vector<PrimePower> factors;
    const auto strip = [&](std::uint64_t p) {
        if (m % p) return;
        std::uint64_t e = 0;
        while (m % p == 0) m /= p, ++e;
        factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    static constexpr std::uint64_t wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t d = 7;
    std::size_t w = 0;
    bool cofactor_tested = false;
    while (m > 1 && d <= m / d) {
        if (m % d == 0) {
            strip(d);
            cofactor_tested = false;
        }
        // Large prime cofactors end the scan early; retest only when m changes.
        if (!cofactor_tested && d > 1'000'000) {
            if (m > 1 && is_prime(m)) break;
            cofactor_tested = true;
        }
        d += wheel[w];
        w = (w + 1) & 7;
    }
    if (m > 1) factors.push_back({m, 1});
    return FactoredInteger::from_factors(std::move(factors));
}

inline FactoredInteger factor(std::uint64_t n) { return factor(mpz_class(static_cast<unsigned long>(n))); }

}  // namespace gapcert
