#include <doctest.h>

#include <map>
#include <set>

#include "lrq/classify.hpp"
#include "lrq/cyclic_type.hpp"
#include "lrq/numtheory.hpp"
#include "support.hpp"

using namespace lrq;

namespace {

const std::vector<Family> kFamilies = {
    Family::Mu,          Family::MuNQ,        Family::BD,          Family::BT,          Family::BO,
    Family::BI,          Family::Brieskorn2a, Family::Brieskorn2b, Family::Brieskorn3a, Family::Brieskorn3b,
    Family::Brieskorn4,  Family::Brieskorn5,  Family::Metacyclic3,
};

std::string key(const CatalogEntry& e) {
    std::string s(family_name(e.family));
    for (const auto& [k, v] : e.params) s += "," + k + "=" + std::to_string(v);
    return s;
}

} // namespace

TEST_CASE("family names round trip") {
    for (auto f : kFamilies) CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("Nope").has_value());
}

TEST_CASE("SL2 catalog") {
    auto c0 = sl2_catalog(0, 120);
    CHECK(c0.size() == 152);
    CHECK(c0.back().family == Family::BI);
    CHECK(c0.back().length == 120);
    for (const auto& e : c0) {
        CHECK(e.lambda == 0);
        CHECK(e.gorenstein);
        CHECK(static_cast<std::int64_t>(e.scheme.abs->order()) == e.length);
        CHECK(family_length(e.family, e.params) == e.length);
    }
    // Every non-cyclic family needs p >= 3, so p = 2 keeps only mu_n.
    auto c2 = sl2_catalog(2, 48);
    CHECK(c2.size() == 48);
    for (const auto& e : c2) CHECK(e.family == Family::Mu);
    // p = 3 drops BT, BO, BI but keeps BD.
    auto c3 = sl2_catalog(3, 120);
    for (const auto& e : c3) CHECK((e.family == Family::Mu || e.family == Family::BD));
    auto c5 = sl2_catalog(5, 120);
    CHECK(std::none_of(c5.begin(), c5.end(), [](const auto& e) { return e.family == Family::BI; }));
    CHECK(std::any_of(c5.begin(), c5.end(), [](const auto& e) { return e.family == Family::BO; }));
}

TEST_CASE("GL2 catalog") {
    auto c = gl2_catalog(0, 60);
    std::set<std::string> seen;
    for (const auto& e : c) {
        CHECK(seen.insert(key(e)).second);
        CHECK(e.lambda == 0);
        CHECK(predicates(e.rep).faithful);
        CHECK(all_abelian_subgroups_cyclic(*e.scheme.abs));
    }
    // Conjugate cyclic pairs appear once.
    std::map<std::int64_t, std::set<std::int64_t>> qs;
    for (const auto& e : c)
        if (e.family == Family::MuNQ) qs[param(e.params, "n")].insert(param(e.params, "q"));
    for (const auto& [n, set] : qs)
        for (auto q : set) {
            auto qi = nt::mod_inverse(q, n).value();
            if (qi != q) CHECK_FALSE(set.count(qi));
        }
    // Catalog order: by length, then family.
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].length <= c[i].length);
}

TEST_CASE("cyclic in every characteristic") {
    std::set<std::string> common;
    bool first = true;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        std::set<std::string> keys;
        for (const auto& e : gl2_catalog(p, 48)) keys.insert(key(e));
        if (first) common = keys;
        else {
            std::set<std::string> meet;
            std::set_intersection(common.begin(), common.end(), keys.begin(), keys.end(),
                                  std::inserter(meet, meet.begin()));
            common = meet;
        }
        first = false;
    }
    CHECK_FALSE(common.empty());
    for (const auto& k : common) CHECK(k.rfind("MuNQ", 0) == 0);
}

TEST_CASE("SL3 and GL3 catalogs") {
    for (const auto& e : sl3_catalog(0, 20)) {
        CHECK(e.family == Family::Mu);
        CHECK(det_character(e.rep).trivial);
    }
    auto g3 = gl3_catalog(0, Gl3Bounds{30, 300});
    std::size_t meta = 0;
    for (const auto& e : g3) {
        if (e.family == Family::Mu) continue;
        ++meta;
        REQUIRE(e.family == Family::Metacyclic3);
        // Odd dimension: ord(r) divides 3.
        CHECK(nt::multiplicative_order(param(e.params, "r"), param(e.params, "m")) == 3);
        CHECK_FALSE(e.scheme.abs->is_abelian());
    }
    CHECK(meta > 0);
    for (const auto& e : gl3_catalog(3, Gl3Bounds{30, 300})) CHECK(e.scheme.abs->is_cyclic());
}

TEST_CASE("split metacyclic parameters") {
    MetacyclicParams a{7, 3, 2};
    CHECK(a.valid());
    CHECK(a.e() == 3);
    CHECK_FALSE(a.very_small()); // 3 does not divide n/e = 1
    MetacyclicParams b{7, 9, 2};
    CHECK(b.valid());
    CHECK(b.very_small());
    CHECK_FALSE(b.valid(3));
    MetacyclicParams c{7, 9, 3}; // ord(3) mod 7 = 6 does not divide 9
    CHECK_FALSE(c.valid());
}

TEST_CASE("parameter validation") {
    CHECK(error_kind([] { family_generators(Family::BD, {{"n", 1}}); }) == ErrorKind::InvalidParameters);
    CHECK(error_kind([] { family_generators(Family::MuNQ, {{"n", 6}, {"q", 2}}); }) == ErrorKind::InvalidParameters);
    CHECK(error_kind([] { family_generators(Family::Metacyclic3, {{"m", 7}, {"f", 1}, {"N", 1}, {"r", 2}}); }) ==
          ErrorKind::InvalidParameters);
    CHECK(error_kind([] { family_length(Family::Brieskorn3b, {{"m", 5}}); }) == ErrorKind::InvalidParameters);
    CHECK(error_kind([] { param({}, "n"); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("closed-form lengths match closures") {
    const std::vector<std::pair<Family, Params>> samples = {
        {Family::BD, {{"n", 7}}},
        {Family::Brieskorn2a, {{"m", 3}, {"n", 2}}},
        {Family::Brieskorn2b, {{"m", 2}, {"n", 3}}},
        {Family::Brieskorn3a, {{"m", 5}}},
        {Family::Brieskorn3b, {{"m", 3}}},
        {Family::Brieskorn4, {{"m", 5}}},
        {Family::Brieskorn5, {{"m", 7}}},
        {Family::Metacyclic3, {{"m", 7}, {"f", 2}, {"N", 2}, {"r", 2}}},
    };
    for (const auto& [f, ps] : samples) {
        auto e = make_entry(f, ps, 0);
        CHECK(static_cast<std::int64_t>(e.scheme.abs->order()) == family_length(f, ps));
        CHECK(e.lambda == 0);
    }
}

TEST_CASE("cyclic types") {
    auto t = parse_type("1/5(2,3)");
    CHECK(t.n == 5);
    CHECK(format_type(t) == "1/5(2,3)");
    CHECK(error_kind([] { parse_type("1/5(2,"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_type("1/6(2,1)"); }) == ErrorKind::BadInput);
    CHECK(canonical_toric_form(CyclicType{1, {0, 0}}).weights == std::vector<std::int64_t>{1, 1});

    for (std::int64_t n = 2; n <= 30; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(q, n) != 1) continue;
            CyclicType a{n, {1, q}};
            auto c = canonical_toric_form(a);
            CHECK(canonical_toric_form(c) == c);
            CHECK(canonical_toric_form(CyclicType{n, {q, 1}}) == c);
            for (auto u : nt::units_mod(n))
                CHECK(canonical_toric_form(CyclicType{n, {u, nt::mod(u * q, n)}}) == c);
            for (std::int64_t q2 = 1; q2 < n; ++q2) {
                if (std::gcd(q2, n) != 1) continue;
                bool same = canonical_toric_form(CyclicType{n, {1, q2}}) == c;
                CHECK(same == (q2 == q || nt::mod(q * q2, n) == 1));
            }
        }
}
