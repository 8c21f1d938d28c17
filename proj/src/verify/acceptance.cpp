#include "lrq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "lrq/classify.hpp"
#include "lrq/deform.hpp"
#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"
#include "lrq/oracles.hpp"
#include "lrq/singularity.hpp"

namespace lrq::acceptance {

namespace {

// Time limits, in seconds.
constexpr double kSl2Limit = 30.0;
constexpr double kHkLimit = 5.0;
constexpr double kHjLimit = 5.0;
constexpr double kRigidityLimit = 10.0;

struct Catalogs {
    std::vector<std::pair<std::string, std::vector<CatalogEntry>>> all;
};

// Audit catalogs: sl2 up to 120, gl2 up to 96, sl3 and gl3 up to m = 50.
const Catalogs& audit_catalogs() {
    static const Catalogs c = [] {
        Catalogs out;
        out.all.emplace_back("sl2(0,120)", sl2_catalog(0, 120));
        out.all.emplace_back("gl2(0,96)", gl2_catalog(0, 96));
        out.all.emplace_back("sl3(0,50)", sl3_catalog(0, 50));
        out.all.emplace_back("gl3(0,50/500)", gl3_catalog(0, Gl3Bounds{50, 500}));
        return out;
    }();
    return c;
}

Result fail(std::string detail) { return {"", false, std::move(detail)}; }
Result ok(std::string detail) { return {"", true, std::move(detail)}; }

std::string label(const CatalogEntry& e) {
    std::string s(family_name(e.family));
    for (const auto& [k, v] : e.params) s += " " + k + "=" + std::to_string(v);
    return s;
}

Result catalog_lengths() {
    auto cat = sl2_catalog(7, 120);
    std::map<std::pair<Family, std::int64_t>, std::int64_t> seen;
    for (const auto& e : cat) {
        std::int64_t n = e.params.empty() ? 0 : e.params.front().second;
        auto order = static_cast<std::int64_t>(e.scheme.abs->order());
        std::int64_t expect = 0;
        switch (e.family) {
        case Family::Mu: expect = n; break;
        case Family::BD: expect = 4 * n; break;
        case Family::BT: expect = 24; break;
        case Family::BO: expect = 48; break;
        case Family::BI: expect = 120; break;
        default: return fail("unexpected family " + label(e));
        }
        if (order != expect || e.length != expect) return fail(label(e) + " has order " + std::to_string(order));
        if (!seen.emplace(std::pair{e.family, n}, order).second) return fail("duplicate " + label(e));
    }
    for (std::int64_t n = 1; n <= 120; ++n)
        if (!seen.count({Family::Mu, n})) return fail("missing mu_" + std::to_string(n));
    for (std::int64_t n = 2; n <= 30; ++n)
        if (!seen.count({Family::BD, n})) return fail("missing BD_" + std::to_string(n));
    for (auto f : {Family::BT, Family::BO, Family::BI})
        if (!seen.count({f, 0})) return fail("missing " + std::string(family_name(f)));
    if (seen.size() != 120 + 29 + 3) return fail("extra entries: " + std::to_string(seen.size()));
    if (cat.back().family != Family::BI) return fail("last entry is not BI");
    return ok(std::to_string(cat.size()) + " entries, orders n, 4n, 24, 48, 120");
}

Result very_small_audit() {
    std::size_t total = 0;
    for (const auto& [name, cat] : audit_catalogs().all)
        for (const auto& e : cat) {
            ++total;
            auto rank_l = lambda(e.rep);
            auto char_l = lambda_character_sum(e.rep);
            if (rank_l != 0 || char_l != 0)
                return fail(name + " " + label(e) + ": lambda " + std::to_string(rank_l) + " / " +
                            std::to_string(char_l));
        }
    return ok(std::to_string(total) + " entries with lambda = 0 by rank and by character sums");
}

Result hk_closed_forms() {
    for (std::int64_t n = 2; n <= 50; ++n) {
        auto a = hilbert_kunz(CyclicType{n, {1, 1}});
        auto b = hilbert_kunz(CyclicType{n, {1, n - 1}});
        if (a != Rational(n + 1, 2)) return fail("1/" + std::to_string(n) + "(1,1): " + a.str());
        if (b != Rational(2 * n - 1, n)) return fail("1/" + std::to_string(n) + "(1,n-1): " + b.str());
    }
    return ok("(n+1)/2 and 2-1/n for n = 2..50");
}

Result f_signature() {
    std::size_t total = 0;
    for (const auto& [name, cat] : audit_catalogs().all)
        for (const auto& e : cat) {
            if (e.rep.dim < 2) continue;
            ++total;
            auto inv = invariants(make_singularity(e.rep));
            if (inv.f_signature != Rational(1, e.length)) return fail(name + " " + label(e) + ": " + inv.f_signature.str());
        }
    return ok(std::to_string(total) + " entries with s(X) = 1/length");
}

Result hj_round_trip() {
    std::size_t pairs = 0;
    for (std::int64_t n = 2; n <= 200; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            ++pairs;
            auto a = hj_fraction(n, q);
            for (auto x : a)
                if (x < 2) return fail("entry below 2 for " + std::to_string(n) + "/" + std::to_string(q));
            if (oracle::hj_evaluate(a) != Rational(n, q))
                return fail("bad value for " + std::to_string(n) + "/" + std::to_string(q));
            if (continuants(a).back() != n)
                return fail("continuant mismatch for " + std::to_string(n) + "/" + std::to_string(q));
        }
    return ok(std::to_string(pairs) + " pairs");
}

Result class_groups() {
    auto cl = [](Family f, const Params& ps) {
        auto e = make_entry(f, ps, 0);
        return std::pair{invariants(make_singularity(e.rep)).class_group, e.scheme.abs->elements()};
    };
    for (std::int64_t n = 2; n <= 40; ++n) {
        auto [c, els] = cl(Family::Mu, {{"n", n}});
        if (c.factors != std::vector<std::int64_t>{n}) return fail("mu_" + std::to_string(n));
    }
    for (std::int64_t n = 2; n <= 20; ++n) {
        auto [c, els] = cl(Family::BD, {{"n", n}});
        std::vector<std::int64_t> expect = n % 2 ? std::vector<std::int64_t>{4} : std::vector<std::int64_t>{2, 2};
        if (c.factors != expect) return fail("BD_" + std::to_string(n));
        auto stats = oracle::abelianization_stats(els);
        if (stats.order != 4 || stats.exponent != (n % 2 ? 4 : 2)) return fail("oracle disagrees on BD_" + std::to_string(n));
    }
    const std::vector<std::tuple<Family, std::vector<std::int64_t>, std::int64_t>> exceptional = {
        {Family::BT, {3}, 3}, {Family::BO, {2}, 2}, {Family::BI, {}, 1}};
    for (const auto& [f, expect, order] : exceptional) {
        auto [c, els] = cl(f, {});
        if (c.factors != expect) return fail(std::string(family_name(f)) + " class group");
        auto stats = oracle::abelianization_stats(els);
        if (stats.order != order) return fail("oracle disagrees on " + std::string(family_name(f)));
    }
    return ok("mu_n -> [n], BD_n -> [4] / [2,2], BT -> [3], BO -> [2], BI -> []");
}

Result rigidity_sweep() {
    std::size_t types = 0, nonrigid = 0;
    for (std::int64_t n = 1; n <= 100; ++n)
        for (std::int64_t q1 = 0; q1 < n; ++q1) {
            if (std::gcd(q1, n) != 1) continue;
            for (std::int64_t q2 = 0; q2 < n; ++q2) {
                if (std::gcd(q2, n) != 1) continue;
                ++types;
                ThreefoldType t = CyclicThreefold{n, q1, q2};
                if (!is_rigid(t, 2)) return fail("non-rigid at p = 2: " + str(t));
                bool expect_nonrigid = n % 7 == 0 && (1 + q1 + q2) % n == 0;
                auto space = deformation_space(t, 7);
                if (space.rigid == expect_nonrigid) return fail("p = 7 mismatch: " + str(t));
                if (expect_nonrigid) {
                    ++nonrigid;
                    if (space.exponent != nt::valuation(n, 7)) return fail("exponent mismatch: " + str(t));
                }
            }
        }
    // Cross-check on the characters: chi_ad is trivial for cyclic groups, so the
    // criterion is "not etale and chi_det trivial".
    std::size_t by_chars = 0;
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t n = 2; n <= 21; ++n)
            for (std::int64_t q1 = 1; q1 < n; ++q1)
                for (std::int64_t q2 = q1; q2 < n; ++q2) {
                    if (std::gcd(q1, n) != 1 || std::gcd(q2, n) != 1) continue;
                    auto g = close(family_generators(Family::Mu, {{"n", n}, {"q1", q1}, {"q2", q2}}));
                    auto scheme = make_scheme(p, std::move(g));
                    auto rep = natural_representation(scheme);
                    bool nonrigid_chars = false;
                    if (!scheme.is_etale()) {
                        if (!ad_character(scheme).trivial) return fail("chi_ad nontrivial on a cyclic type");
                        nonrigid_chars = det_character(rep).trivial;
                    }
                    ++by_chars;
                    if (is_rigid(CyclicThreefold{n, q1, q2}, p) == nonrigid_chars)
                        return fail("character criterion disagrees at p = " + std::to_string(p) + " for " +
                                    str(CyclicThreefold{n, q1, q2}));
                }
    return ok(std::to_string(types) + " types; p = 2 all rigid; p = 7 has " + std::to_string(nonrigid) +
              " non-rigid; " + std::to_string(by_chars) + " agree with chi_ad / chi_det");
}

Result hara_gates() {
    const std::vector<std::pair<AdeType, std::vector<std::int64_t>>> cases = {
        {{'A', 5}, {}}, {{'D', 6}, {2}}, {{'E', 6}, {2, 3}}, {{'E', 7}, {2, 3}}, {{'E', 8}, {2, 3, 5}}};
    for (const auto& [t, bad] : cases)
        for (std::int64_t p : {2, 3, 5, 7}) {
            bool expect = std::find(bad.begin(), bad.end(), p) == bad.end();
            auto r = is_f_regular_graph(ade_graph(t), p);
            if (r.f_regular != expect) return fail(t.str() + " at p = " + std::to_string(p) + ": " + r.reason);
            if (rdp_group_for(t, p).has_value() != expect)
                return fail("group table disagrees for " + t.str() + " at p = " + std::to_string(p));
        }
    return ok("A any p; D p != 2; E6, E7 p != 2,3; E8 p != 2,3,5");
}

Result root_subsystems() {
    for (auto t : {AdeType{'A', 1}, AdeType{'A', 2}, AdeType{'A', 3}, AdeType{'A', 4}, AdeType{'D', 4}}) {
        auto ours = rdp_specializations(RootDiagram::single(t));
        auto brute = oracle::brute_root_subsystems(t);
        if (ours != brute)
            return fail(t.str() + ": " + std::to_string(ours.size()) + " vs brute force " + std::to_string(brute.size()));
    }
    for (int n = 1; n <= 8; ++n)
        for (const auto& d : rdp_specializations(RootDiagram::single({'A', n}))) {
            int used = 0;
            for (const auto& c : d.components()) {
                if (c.kind != 'A') return fail("A" + std::to_string(n) + " contains " + d.str());
                used += c.n + 1;
            }
            if (used > n + 1) return fail("A" + std::to_string(n) + " contains " + d.str());
        }
    return ok("A1..A4, D4 equal brute force; A_n (n <= 8) only A-type");
}

Result length_monotonicity() {
    std::vector<AdeType> all;
    for (int n = 1; n <= 8; ++n) all.push_back({'A', n});
    for (int n = 4; n <= 8; ++n) all.push_back({'D', n});
    for (int n = 6; n <= 8; ++n) all.push_back({'E', n});
    std::size_t checked = 0;
    for (const auto& t : all) {
        auto r = length_monotonic_check(t);
        checked += r.checked;
        if (!r.monotone()) return fail(t.str() + ": " + r.violations.front());
    }
    return ok(std::to_string(checked) + " components over " + std::to_string(all.size()) + " types");
}

Result d_power_of_p_cyclic() {
    std::size_t total = 0;
    auto check = [&](const std::vector<CatalogEntry>& cat, const std::string& name) -> std::optional<Result> {
        for (const auto& e : cat) {
            ++total;
            if (!e.scheme.abs->is_cyclic() || !oracle::literal_is_cyclic(e.scheme.abs->elements()))
                return fail(name + " " + label(e) + " is not cyclic");
        }
        return std::nullopt;
    };
    if (auto r = check(gl2_catalog(2, 96), "gl2(2,96)")) return *r;
    if (auto r = check(gl3_catalog(3, Gl3Bounds{50, 500}), "gl3(3,50/500)")) return *r;
    return ok(std::to_string(total) + " entries, all cyclic");
}

} // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"catalog_lengths", kSl2Limit, catalog_lengths},
        {"very_small_audit", 0, very_small_audit},
        {"hilbert_kunz_closed_forms", kHkLimit, hk_closed_forms},
        {"f_signature", 0, f_signature},
        {"hj_round_trip", kHjLimit, hj_round_trip},
        {"class_groups", 0, class_groups},
        {"rigidity_sweep", kRigidityLimit, rigidity_sweep},
        {"hara_graph_gates", 0, hara_gates},
        {"root_subsystem_oracle", 0, root_subsystems},
        {"length_monotonicity", 0, length_monotonicity},
        {"d_power_of_p_cyclicity", 0, d_power_of_p_cyclic},
    };
    return list;
}

std::vector<Result> run_all() {
    std::vector<Result> out;
    for (const auto& c : criteria()) {
        auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = fail(std::string("exception: ") + e.what());
        }
        r.id = c.id;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.limit_seconds = c.limit_seconds;
        if (c.limit_seconds > 0 && r.seconds > c.limit_seconds) {
            r.pass = false;
            r.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
        }
        out.push_back(std::move(r));
    }
    return out;
}

void print(std::ostream& os, const std::vector<Result>& results) {
    for (const auto& r : results) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
        os << (r.pass ? "PASS " : "FAIL ") << r.id << " " << secs << " " << r.detail << "\n";
    }
}

} // namespace lrq::acceptance
