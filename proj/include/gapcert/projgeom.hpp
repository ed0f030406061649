#pragma once

// The geometric layer: integers as gcd-normalized exponent vectors over the
// primes (projective points), exact log-rationality tests, classification of
// the line through two points, and reduction of a generator set to at most
// two generators.
//
// A line is classified through the Hilbert basis of the planar cone
// C = M cap (non-negative orthant), where M is the saturation of the integer
// span of the two exponent vectors. The cone's two primitive extreme-ray
// generators always belong to the Hilbert basis; the line reduces to a
// two-generator semigroup exactly when nothing else does.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "factored.hpp"

namespace gapcert {

/// A point of the non-negative rational projective space with finite support:
/// held as its unique integer representative with gcd of exponents 1.
class ProjectivePoint {
public:
    static ProjectivePoint of(const FactoredInteger& f) {
        if (f.is_one()) throw unit_has_no_point_error();
        std::uint64_t g = 0;
        for (const auto& [p, e] : f.factors()) g = std::gcd(g, e);
        std::vector<PrimePower> norm = f.factors();
        for (auto& pp : norm) pp.exponent /= g;
        ProjectivePoint pt;
        pt.rep_ = FactoredInteger::from_factors(std::move(norm));
        return pt;
    }

    /// The integer representative with gcd-1 exponents.
    const FactoredInteger& representative() const { return rep_; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    ProjectivePoint() = default;
    FactoredInteger rep_;
};

inline ProjectivePoint projective_point(const FactoredInteger& f) { return ProjectivePoint::of(f); }
inline ProjectivePoint projective_point(std::uint64_t n) { return ProjectivePoint::of(factor(n)); }

/// Point of n together with the power relating them: n = representative^power.
inline std::pair<ProjectivePoint, std::uint64_t> point_and_power(const FactoredInteger& f) {
    auto pt = ProjectivePoint::of(f);
    std::uint64_t g = 0;
    for (const auto& [p, e] : f.factors()) g = std::gcd(g, e);
    return {pt, g};
}

/// True iff g1 and g2 carry the same projective point; equivalently,
/// log_{g1}(g2) is rational.
inline bool same_point(std::uint64_t g1, std::uint64_t g2) {
    if (g1 < 2 || g2 < 2) throw out_of_range_error("same_point: arguments must be >= 2");
    return projective_point(g1) == projective_point(g2);
}

/// True iff both are > 1 and log_{p1}(p2) is irrational (distinct points).
inline bool is_irrational_pair(std::uint64_t p1, std::uint64_t p2) {
    if (p1 <= 1 || p2 <= 1) return false;
    return !same_point(p1, p2);
}

namespace detail {

using Vec = std::vector<mpz_class>;

/// Basis of the saturation (Q-span intersected with Z^r) of the integer span
/// of two independent rows. Column operations on the working matrix are
/// mirrored as inverse row operations on a tracking matrix whose first two
/// rows end up spanning the saturation.
inline std::array<Vec, 2> saturate_pair(Vec row0, Vec row1) {
    const std::size_t r = row0.size();
    std::array<Vec, 2> a{std::move(row0), std::move(row1)};
    std::vector<Vec> track(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) track[i][i] = 1;

    const auto col_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[0][i], a[0][j]);
        std::swap(a[1][i], a[1][j]);
        std::swap(track[i], track[j]);
    };
    // col_j -= q * col_i on the working matrix; row_i += q * row_j on track.
    const auto col_submul = [&](std::size_t j, std::size_t i, const mpz_class& q) {
        a[0][j] -= q * a[0][i];
        a[1][j] -= q * a[1][i];
        for (std::size_t c = 0; c < r; ++c) track[i][c] += q * track[j][c];
    };

    // Reduces one row to a single nonzero entry at its pivot column by
    // Euclidean column sweeps.
    const auto clean_row = [&](std::size_t row, std::size_t lead) {
        std::size_t piv = lead;
        while (piv < r && a[row][piv] == 0) ++piv;
        if (piv == r) throw out_of_range_error("saturate_pair: rows must be independent");
        if (piv != lead) col_swap(lead, piv);
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t j = lead + 1; j < r; ++j) {
                if (a[row][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[row][j].get_mpz_t(), a[row][lead].get_mpz_t());
                col_submul(j, lead, q);
                if (a[row][j] != 0) {
                    col_swap(lead, j);
                    dirty = true;
                }
            }
        }
    };

    // Stage one: alternate cleaning row 0 and eliminating entry (1,0) until
    // the first column holds the only nonzero of row 0. Row swaps during the
    // elimination can repopulate row 0, hence the outer loop.
    while (true) {
        clean_row(0, 0);
        if (a[1][0] == 0) break;
        // One Euclidean step on the rows; row operations do not touch the tracker.
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[1][0].get_mpz_t(), a[0][0].get_mpz_t());
        for (std::size_t c = 0; c < r; ++c) a[1][c] -= q * a[0][c];
        if (a[1][0] != 0) a[0].swap(a[1]);
    }
    // Stage two: clean row 1 against pivot column 1. Its column operations act
    // on zero entries of row 0 only, so stage one's shape is preserved.
    clean_row(1, 1);
    return {track[0], track[1]};
}

inline mpz_class cross(const mpz_class& a1, const mpz_class& a2, const mpz_class& b1,
                       const mpz_class& b2) {
    return a1 * b2 - a2 * b1;
}

}  // namespace detail

/// The affine plane of a projective line, carried as a saturated lattice:
/// the two basis rows span V cap Z^r over the ambient primes, and any integer
/// vector of the rational span is an integer combination of them.
struct PlaneLattice {
    std::vector<std::uint64_t> primes;                 ///< ascending union support
    std::array<std::vector<mpz_class>, 2> basis;

    /// Integer coordinates of vec in the basis, or nullopt when vec does not
    /// lie on the plane. For integer vectors, lying on the plane and lying in
    /// the lattice coincide (saturation).
    std::optional<std::array<mpz_class, 2>> coordinates(const std::vector<mpz_class>& vec) const {
        const auto& c0 = basis[0];
        const auto& c1 = basis[1];
        const std::size_t r = primes.size();
        // Any two columns with a nonzero minor pin the solve.
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                const mpz_class det = detail::cross(c0[i], c0[j], c1[i], c1[j]);
                if (det == 0) continue;
                mpz_class na = detail::cross(vec[i], vec[j], c1[i], c1[j]);
                mpz_class nb = detail::cross(c0[i], c0[j], vec[i], vec[j]);
                if (!mpz_divisible_p(na.get_mpz_t(), det.get_mpz_t()) ||
                    !mpz_divisible_p(nb.get_mpz_t(), det.get_mpz_t())) {
                    return std::nullopt;
                }
                mpz_class alpha = na / det, beta = nb / det;
                for (std::size_t c = 0; c < r; ++c) {
                    if (alpha * c0[c] + beta * c1[c] != vec[c]) return std::nullopt;
                }
                return std::array<mpz_class, 2>{alpha, beta};
            }
        }
        throw out_of_range_error("PlaneLattice: degenerate basis");
    }

    static PlaneLattice saturated_span(const ProjectivePoint& p1, const ProjectivePoint& p2);
};

namespace detail {

inline std::vector<std::uint64_t> union_primes(const FactoredInteger& f1, const FactoredInteger& f2) {
    std::vector<std::uint64_t> primes;
    for (const auto& [p, e] : f1.factors()) primes.push_back(p);
    for (const auto& [p, e] : f2.factors()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

inline Vec exponent_vector(const FactoredInteger& f, const std::vector<std::uint64_t>& primes) {
    Vec v(primes.size(), 0);
    for (const auto& [p, e] : f.factors()) {
        const auto it = std::lower_bound(primes.begin(), primes.end(), p);
        if (it == primes.end() || *it != p) {
            throw out_of_range_error("exponent_vector: prime outside ambient support");
        }
        v[static_cast<std::size_t>(it - primes.begin())] = static_cast<unsigned long>(e);
    }
    return v;
}

}  // namespace detail

inline PlaneLattice PlaneLattice::saturated_span(const ProjectivePoint& p1,
                                                 const ProjectivePoint& p2) {
    if (p1 == p2) throw out_of_range_error("saturated_span: points must be distinct");
    auto primes = detail::union_primes(p1.representative(), p2.representative());
    auto v1 = detail::exponent_vector(p1.representative(), primes);
    auto v2 = detail::exponent_vector(p2.representative(), primes);
    auto basis = detail::saturate_pair(std::move(v1), std::move(v2));
    return PlaneLattice{std::move(primes), std::move(basis)};
}

// ---- classification -------------------------------------------------------

struct SinglePoint {
    FactoredInteger root;  ///< the common representative f
};
struct DoublyClosed {
    FactoredInteger q1, q2;  ///< q1 < q2; the integers of the cone's extreme rays
};
struct NotDoublyClosed {
    std::vector<std::uint64_t> primes;                  ///< ambient support
    std::vector<std::vector<mpz_class>> hilbert_basis;  ///< >= 3 exponent vectors, lexicographic
};
struct HigherRank {
    std::size_t rank;  ///< rational rank of the exponent vectors, >= 3
};

using ClassificationResult = std::variant<SinglePoint, DoublyClosed, NotDoublyClosed, HigherRank>;

namespace detail {

struct Ray {
    mpz_class a, b;  // direction in basis coordinates
};

/// Lattice vector alpha*c0 + beta*c1.
inline Vec combine(const PlaneLattice& lat, const mpz_class& alpha, const mpz_class& beta) {
    Vec v(lat.primes.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] = alpha * lat.basis[0][c] + beta * lat.basis[1][c];
    }
    return v;
}

inline bool nonnegative(const Vec& v) {
    for (const auto& x : v) {
        if (x < 0) return false;
    }
    return true;
}

inline void make_primitive(Ray& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.a.get_mpz_t(), r.b.get_mpz_t());
    if (g > 1) {
        r.a /= g;
        r.b /= g;
    }
}

/// The two primitive extreme rays of the cone {(a,b) : a*c0 + b*c1 >= 0},
/// oriented so that cross(first, second) > 0.
inline std::array<Ray, 2> extreme_rays(const PlaneLattice& lat) {
    std::vector<Ray> feasible;
    const std::size_t r = lat.primes.size();
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& n0 = lat.basis[0][i];
        const mpz_class& n1 = lat.basis[1][i];
        if (n0 == 0 && n1 == 0) continue;
        for (Ray d : {Ray{-n1, n0}, Ray{n1, -n0}}) {
            if (!nonnegative(combine(lat, d.a, d.b))) continue;
            make_primitive(d);
            bool seen = false;
            for (const auto& f : feasible) seen = seen || (f.a == d.a && f.b == d.b);
            if (!seen) feasible.push_back(std::move(d));
        }
    }
    if (feasible.size() < 2) {
        throw out_of_range_error("extreme_rays: cone is not two-dimensional");
    }
    auto lo = feasible.begin(), hi = feasible.begin();
    for (auto it = feasible.begin(); it != feasible.end(); ++it) {
        if (cross(lo->a, lo->b, it->a, it->b) < 0) lo = it;
        if (cross(hi->a, hi->b, it->a, it->b) > 0) hi = it;
    }
    if (cross(lo->a, lo->b, hi->a, hi->b) <= 0) {
        throw out_of_range_error("extreme_rays: cone is not pointed");
    }
    return {*lo, *hi};
}

struct HilbertElement {
    mpz_class a, b;  // coordinates in the lattice basis
    Vec vec;         // exponent vector over the ambient primes
};

/// Hilbert basis of the monoid (lattice points of the plane in the
/// non-negative orthant), in basis coordinates. The extreme-ray primitives are
/// always members; remaining candidates live in the fundamental parallelogram
/// and are kept when they do not split as a sum of two members.
inline std::vector<HilbertElement> hilbert_basis(const PlaneLattice& lat) {
    const auto rays = extreme_rays(lat);
    const mpz_class det = cross(rays[0].a, rays[0].b, rays[1].a, rays[1].b);
    if (det > 65536) {
        const std::uint64_t estimate = det.fits_ulong_p() ? det.get_ui() : UINT64_MAX;
        throw enumeration_budget_error(65536, estimate);
    }
    const std::uint64_t d = det.get_ui();

    std::vector<HilbertElement> candidates;
    candidates.push_back({rays[0].a, rays[0].b, combine(lat, rays[0].a, rays[0].b)});
    candidates.push_back({rays[1].a, rays[1].b, combine(lat, rays[1].a, rays[1].b)});
    for (std::uint64_t s = 0; s < d; ++s) {
        for (std::uint64_t t = 0; t < d; ++t) {
            if (s == 0 && t == 0) continue;
            // z = (s*u + t*v)/d must be integral in basis coordinates.
            mpz_class za = s * rays[0].a + t * rays[1].a;
            mpz_class zb = s * rays[0].b + t * rays[1].b;
            if (!mpz_divisible_ui_p(za.get_mpz_t(), d) || !mpz_divisible_ui_p(zb.get_mpz_t(), d)) {
                continue;
            }
            za /= static_cast<unsigned long>(d);
            zb /= static_cast<unsigned long>(d);
            candidates.push_back({za, zb, combine(lat, za, zb)});
        }
    }

    std::vector<HilbertElement> basis;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i >= 2) {  // extreme-ray primitives are irreducible by construction
            bool splits = false;
            for (std::size_t w = 0; w < candidates.size() && !splits; ++w) {
                if (w == i) continue;
                // The difference of two lattice vectors stays in the lattice;
                // the candidate is reducible when it also stays in the orthant.
                Vec rest(lat.primes.size());
                for (std::size_t c = 0; c < rest.size(); ++c) {
                    rest[c] = candidates[i].vec[c] - candidates[w].vec[c];
                }
                splits = nonnegative(rest);
            }
            if (splits) continue;
        }
        basis.push_back(candidates[i]);
    }
    return basis;
}

inline FactoredInteger integer_of(const std::vector<std::uint64_t>& primes, const Vec& vec) {
    std::vector<PrimePower> factors;
    for (std::size_t c = 0; c < primes.size(); ++c) {
        if (vec[c] == 0) continue;
        if (vec[c] < 0 || !vec[c].fits_ulong_p()) {
            throw out_of_range_error("integer_of: exponent out of range");
        }
        factors.push_back({primes[c], vec[c].get_ui()});
    }
    return FactoredInteger::from_factors(std::move(factors));
}

}  // namespace detail

/// Classifies the line through two distinct points: DoublyClosed(q1, q2) when
/// the planar cone's Hilbert basis has exactly two elements (the integers q1,
/// q2 then generate every integer on the line), NotDoublyClosed with the basis
/// as witness otherwise.
inline ClassificationResult classify_line(const ProjectivePoint& p1, const ProjectivePoint& p2) {
    const PlaneLattice lat = PlaneLattice::saturated_span(p1, p2);
    auto basis = detail::hilbert_basis(lat);
    if (basis.size() == 2) {
        FactoredInteger q1 = detail::integer_of(lat.primes, basis[0].vec);
        FactoredInteger q2 = detail::integer_of(lat.primes, basis[1].vec);
        if (q1.value() > q2.value()) std::swap(q1, q2);
        return DoublyClosed{std::move(q1), std::move(q2)};
    }
    std::vector<detail::Vec> vecs;
    vecs.reserve(basis.size());
    for (auto& e : basis) vecs.push_back(std::move(e.vec));
    std::sort(vecs.begin(), vecs.end());
    return NotDoublyClosed{lat.primes, std::move(vecs)};
}

/// Reduction of a full generator list (values >= 2); witnesses are filled for
/// the reducible outcomes.
struct ReductionResult {
    ClassificationResult classification;
    /// SinglePoint: g_i = root^root_powers[i].
    std::vector<std::uint64_t> root_powers;
    /// DoublyClosed: g_i = q1^pair_exponents[i][0] * q2^pair_exponents[i][1].
    std::vector<std::array<std::uint64_t, 2>> pair_exponents;
};

namespace detail {

/// Rational rank of the rows, by fraction-free elimination.
inline std::size_t matrix_rank(std::vector<Vec> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const mpz_class f = rows[i][c], p = rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] * p - rows[rank][j] * f;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline ReductionResult reduce_generators(const std::vector<std::uint64_t>& gens) {
    if (gens.empty()) throw degenerate_error("reduce_generators: empty generator list");
    std::vector<FactoredInteger> factored;
    std::vector<ProjectivePoint> points;
    for (std::uint64_t g : gens) {
        if (g < 2) throw degenerate_error("reduce_generators: generators must be >= 2");
        factored.push_back(factor(g));
        points.push_back(ProjectivePoint::of(factored.back()));
    }

    ReductionResult result{SinglePoint{points.front().representative()}, {}, {}};

    const bool all_same =
        std::all_of(points.begin(), points.end(), [&](const auto& p) { return p == points.front(); });
    if (all_same) {
        for (const auto& f : factored) result.root_powers.push_back(point_and_power(f).second);
        return result;
    }

    // Ambient support across every generator; spanning pair = first distinct points.
    std::vector<std::uint64_t> primes;
    for (const auto& f : factored) {
        for (const auto& [p, e] : f.factors()) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<detail::Vec> vectors;
    vectors.reserve(factored.size());
    for (const auto& f : factored) vectors.push_back(detail::exponent_vector(f, primes));

    const std::size_t rank = detail::matrix_rank(vectors);
    if (rank >= 3) {
        result.classification = HigherRank{rank};
        return result;
    }

    std::size_t second = 1;
    while (points[second] == points.front()) ++second;
    result.classification = classify_line(points.front(), points[second]);

    if (const auto* dc = std::get_if<DoublyClosed>(&result.classification)) {
        const PlaneLattice lat = PlaneLattice::saturated_span(points.front(), points[second]);
        const auto va = detail::exponent_vector(dc->q1, lat.primes);
        const auto vb = detail::exponent_vector(dc->q2, lat.primes);
        const auto ca = lat.coordinates(va).value();
        const auto cb = lat.coordinates(vb).value();
        const mpz_class det = detail::cross(ca[0], ca[1], cb[0], cb[1]);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto cg = lat.coordinates(detail::exponent_vector(factored[i], lat.primes));
            if (!cg) {
                throw membership_failure_error("generator " + std::to_string(gens[i]) +
                                               " left the classified plane");
            }
            // Solve (a, b) with cg = a*ca + b*cb over the basis coordinates.
            mpz_class na = detail::cross((*cg)[0], (*cg)[1], cb[0], cb[1]);
            mpz_class nb = detail::cross(ca[0], ca[1], (*cg)[0], (*cg)[1]);
            if (!mpz_divisible_p(na.get_mpz_t(), det.get_mpz_t()) ||
                !mpz_divisible_p(nb.get_mpz_t(), det.get_mpz_t())) {
                throw membership_failure_error("generator " + std::to_string(gens[i]) +
                                               " is not an integer combination of the pair");
            }
            mpz_class a = na / det, b = nb / det;
            if (a < 0 || b < 0 || !a.fits_ulong_p() || !b.fits_ulong_p()) {
                throw membership_failure_error("generator " + std::to_string(gens[i]) +
                                               " needs negative exponents over the pair");
            }
            result.pair_exponents.push_back({a.get_ui(), b.get_ui()});
        }
    }
    return result;
}

}  // namespace gapcert
