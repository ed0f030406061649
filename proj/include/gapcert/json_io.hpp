#pragma once

// JSON forms of the library's records. The certificate schema is fixed:
// { pair: [p1, p2], j, t, left, right, width_floor, status } with the
// endpoints in the factored-string grammar.

#include <string>

#include <json.hpp>

#include "factored.hpp"
#include "gaps.hpp"
#include "multigen.hpp"
#include "projgeom.hpp"
#include "sequences.hpp"

namespace gapcert {

using nlohmann::json;

inline CertificateStatus status_from_string(const std::string& s) {
    if (s == "verified") return CertificateStatus::verified;
    if (s == "refused") return CertificateStatus::refused;
    if (s == "failed") return CertificateStatus::failed;
    if (s == "unverified") return CertificateStatus::unverified;
    throw out_of_range_error("unknown certificate status: " + s);
}

inline json to_json(const GapCertificate& c) {
    return json{{"pair", {c.p1, c.p2}},
                {"j", c.j},
                {"t", c.t},
                {"left", c.left.str()},
                {"right", c.right.str()},
                {"width_floor", c.width_floor.str()},
                {"status", to_string(c.status)}};
}

inline GapCertificate certificate_from_json(const json& j) {
    GapCertificate c;
    c.p1 = j.at("pair").at(0).get<std::uint64_t>();
    c.p2 = j.at("pair").at(1).get<std::uint64_t>();
    c.j = j.at("j").get<std::size_t>();
    c.t = j.at("t").get<std::uint64_t>();
    c.left = FactoredInteger::parse(j.at("left").get<std::string>());
    c.right = FactoredInteger::parse(j.at("right").get<std::string>());
    c.width_floor = FactoredInteger::parse(j.at("width_floor").get<std::string>());
    c.status = j.contains("status") ? status_from_string(j.at("status").get<std::string>())
                                    : CertificateStatus::unverified;
    return c;
}

inline json to_json(const PowerGap& g) {
    return json{{"generator", g.base},
                {"j", g.j},
                {"left", g.left.str()},
                {"right", g.right.str()},
                {"status", to_string(g.status)}};
}

inline json to_json(const MinWidthGap& g) {
    return json{{"generators", g.generators},
                {"exponents", g.exponents},
                {"left", g.left_str()},
                {"min_width", g.min_width},
                {"status", to_string(g.status)}};
}

inline json to_json(const ApproxInverseRecord& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        steps.push_back({{"j", s.multiplier_q},
                         {"l", s.scan_index},
                         {"inverse", s.inverse},
                         {"residue", s.residue}});
    }
    return json{{"p", r.p}, {"q", r.q}, {"steps", steps}, {"inverse", r.final_inverse()}};
}

inline json to_json(const StabilizationRecord& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"k", t.k}, {"x", t.x}});
    return json{{"pair", {r.p1, r.p2}}, {"max_k", r.max_index}, {"terms", terms}};
}

inline json to_json(const CrosscheckReport& r) {
    json j{{"p", r.p},
           {"q", r.q},
           {"reduction_gcd", r.reduction_gcd},
           {"prefix_length", r.prefix_length},
           {"final_inverse", r.final_inverse}};
    if (r.mismatch_pos) j["mismatch_pos"] = *r.mismatch_pos;
    return j;
}

inline json to_json(const ClassificationResult& c) {
    if (const auto* sp = std::get_if<SinglePoint>(&c)) {
        return json{{"kind", "single_point"}, {"root", sp->root.str()}};
    }
    if (const auto* dc = std::get_if<DoublyClosed>(&c)) {
        return json{{"kind", "doubly_closed"}, {"q1", dc->q1.str()}, {"q2", dc->q2.str()}};
    }
    if (const auto* nd = std::get_if<NotDoublyClosed>(&c)) {
        json basis = json::array();
        for (const auto& vec : nd->hilbert_basis) {
            json row = json::array();
            for (const auto& e : vec) row.push_back(e.get_str());
            basis.push_back(row);
        }
        return json{{"kind", "not_doubly_closed"}, {"primes", nd->primes}, {"hilbert_basis", basis}};
    }
    return json{{"kind", "higher_rank"}, {"rank", std::get<HigherRank>(c).rank}};
}

inline json to_json(const MinimaRecord& r) {
    json terms = json::array();
    for (const auto& t : r.terms) {
        terms.push_back({{"k", t.k},
                         {"exponents", t.exponents},
                         {"m", t.m.str()},
                         {"value", t.m.value().get_str()}});
    }
    json diffs = json::array();
    for (auto d : r.k_differences()) diffs.push_back(d);
    return json{{"sub_primes", r.sub_primes},
                {"base", r.base_prime},
                {"k_max", r.k_max},
                {"terms", terms},
                {"differences", diffs},
                {"differences_nondecreasing", r.differences_nondecreasing()}};
}

}  // namespace gapcert
