#include <doctest.h>

#include <random>

#include "lrq/classify.hpp"
#include "lrq/numtheory.hpp"
#include "lrq/oracles.hpp"
#include "lrq/singularity.hpp"
#include "support.hpp"

using namespace lrq;

namespace {

LrqSingularity sing(Family f, const Params& ps, std::int64_t p) { return make_singularity(make_entry(f, ps, p).rep); }

} // namespace

TEST_CASE("continued fractions") {
    CHECK(hj_fraction(12, 5) == std::vector<std::int64_t>{3, 2, 3});
    CHECK(hj_fraction(5, 4) == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(hj_fraction(5, 2) == std::vector<std::int64_t>{3, 2});
    CHECK(hj_fraction(7, 1) == std::vector<std::int64_t>{7});
    CHECK(continuants({3, 2, 3}) == std::vector<std::int64_t>{1, 3, 5, 12});
    CHECK(error_kind([] { hj_fraction(6, 4); }) == ErrorKind::BadInput);
    CHECK(error_kind([] { hj_fraction(6, 6); }) == ErrorKind::BadInput);
    for (std::int64_t n = 2; n <= 60; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto a = hj_fraction(n, q);
            CHECK(oracle::hj_evaluate(a) == Rational(n, q));
            // Duality with n/(n-q): sum(a_i - 1) = len(a) + len(dual) - 1.
            auto b = hj_fraction(n, n - q);
            std::int64_t s = 0;
            for (auto x : a) s += x - 1;
            CHECK(s == static_cast<std::int64_t>(a.size() + b.size()) - 1);
        }
}

TEST_CASE("hilbert bases") {
    auto hb = hilbert_basis(CyclicType{3, {1, 2}});
    CHECK(hb == std::vector<std::vector<std::int64_t>>{{3, 0}, {1, 1}, {0, 3}});
    // Surface case: the basis size is len(hj(n, n - q)) + 2.
    for (std::int64_t n = 2; n <= 25; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto basis = hilbert_basis(CyclicType{n, {1, q}});
            CHECK(basis == oracle::hilbert_basis_dp(n, {1, q}));
            CHECK(basis.size() == hj_fraction(n, n - q).size() + 2);
        }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 13)(rng);
        auto units = nt::units_mod(n);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        std::vector<std::int64_t> q{units[pick(rng)], units[pick(rng)], units[pick(rng)]};
        CHECK(hilbert_basis(CyclicType{n, q}) == oracle::hilbert_basis_dp(n, q));
        CHECK(hilbert_kunz(CyclicType{n, q}) == oracle::hilbert_kunz_dp(n, q));
    }
    CHECK(error_kind([] { hilbert_basis(CyclicType{400, {1, 1, 1}}); }) == ErrorKind::BadInput);
}

TEST_CASE("Hilbert-Kunz multiplicities") {
    CHECK(hilbert_kunz(CyclicType{5, {1, 4}}) == Rational(9, 5));
    for (std::int64_t n = 2; n <= 20; ++n) {
        CHECK(hilbert_kunz(CyclicType{n, {1, n - 1}}) == Rational(2 * n - 1, n));
        CHECK(hilbert_kunz(CyclicType{n, {1, 1}}) == Rational(n + 1, 2));
        CHECK(hilbert_kunz(CyclicType{n, {1, n - 1}}) == oracle::hilbert_kunz_dp(n, {1, n - 1}));
    }
    CHECK(hilbert_kunz(CyclicType{1, {1, 1}}) == Rational(1));
}

TEST_CASE("singularity construction") {
    auto rep = make_entry(Family::Mu, {{"n", 5}}, 0).rep;
    CHECK(error_kind([&] { make_singularity(add_trivial(rep, 1)); }) == ErrorKind::NotVerySmall);
    auto line = natural_representation(make_scheme(0, close({CycMatrix::diagonal({root_of_unity(3)})})));
    CHECK(error_kind([&] { make_singularity(line); }) == ErrorKind::BadDimension);
    auto bd = sing(Family::BD, {{"n", 3}}, 0);
    CHECK(error_kind([&] { hilbert_kunz(bd); }) == ErrorKind::NotImplementedForNonAbelian);
}

TEST_CASE("invariants") {
    auto a4 = sing(Family::Mu, {{"n", 5}}, 0);
    auto v = invariants(a4);
    CHECK(v.f_signature == Rational(1, 5));
    CHECK(v.class_group.factors == std::vector<std::int64_t>{5});
    CHECK(v.pi1_etale.order == 5);
    CHECK(v.gorenstein);
    CHECK(cyclic_type_of(a4).n == 5);
    CHECK(hilbert_kunz(a4) == Rational(9, 5));

    // In characteristic 5 the group scheme is infinitesimal: no etale cover.
    auto a4p = sing(Family::Mu, {{"n", 5}}, 5);
    auto w = invariants(a4p);
    CHECK(w.pi1_etale.order == 1);
    CHECK(w.pi1_etale.abelianization.factors.empty());
    CHECK(w.class_group_dual[0].p_part == 5);
    CHECK(w.class_group_dual[0].prime_to_p == 1);

    auto bd = invariants(sing(Family::BD, {{"n", 6}}, 3));
    CHECK(bd.class_group.factors == std::vector<std::int64_t>{2, 2});
    CHECK(bd.pi1_etale.order == 8);

    auto gl2 = invariants(sing(Family::MuNQ, {{"n", 7}, {"q", 3}}, 0));
    CHECK_FALSE(gl2.gorenstein);
    CHECK(gl2.f_signature == Rational(1, 7));
}

TEST_CASE("dual graph shapes") {
    CHECK(classify_shape(resolution_chain(12, 5)).shape == GraphShape::Chain);
    CHECK(classify_shape(DualGraph{}).shape == GraphShape::Chain);
    auto e8 = classify_shape(ade_graph(parse_ade("E8")));
    CHECK(e8.shape == GraphShape::Star);
    CHECK(e8.branches == std::vector<std::int64_t>{2, 3, 5});
    CHECK(classify_shape(ade_graph(parse_ade("D7"))).branches == std::vector<std::int64_t>{2, 2, 5});
    CHECK(classify_shape(ade_graph(parse_ade("E6"))).branches == std::vector<std::int64_t>{2, 3, 3});
    // A cycle and a graph with two branch points.
    DualGraph cyc{{-2, -2, -2}, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK(classify_shape(cyc).shape == GraphShape::Other);
    DualGraph h{{-2, -2, -2, -2, -2, -2}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}};
    CHECK(classify_shape(h).shape == GraphShape::Other);
    // A star whose arms are not (-2)-curves: branch discriminants come from continuants.
    DualGraph s{{-2, -3, -2, -2, -4}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}};
    CHECK(classify_shape(s).branches == std::vector<std::int64_t>{2, 3, 7});
}

TEST_CASE("F-regularity of graphs") {
    CHECK(is_f_regular_graph(resolution_chain(12, 5), 2).f_regular);
    CHECK_FALSE(is_f_regular_graph(ade_graph(parse_ade("D5")), 2).f_regular);
    CHECK(is_f_regular_graph(ade_graph(parse_ade("D5")), 3).f_regular);
    CHECK_FALSE(is_f_regular_graph(ade_graph(parse_ade("E7")), 3).f_regular);
    CHECK(is_f_regular_graph(ade_graph(parse_ade("E7")), 5).f_regular);
    CHECK_FALSE(is_f_regular_graph(ade_graph(parse_ade("E8")), 5).f_regular);
    CHECK(is_f_regular_graph(ade_graph(parse_ade("E8")), 7).f_regular);
    CHECK(is_f_regular_graph(ade_graph(parse_ade("E8")), 0).f_regular);
    DualGraph bad{{-1, -2}, {{0, 1}}};
    CHECK_FALSE(is_f_regular_graph(bad, 7).f_regular);
    DualGraph s237{{-2, -3, -2, -2, -4}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}};
    CHECK_FALSE(is_f_regular_graph(s237, 11).f_regular);
}

TEST_CASE("rational double point table") {
    auto a4 = rdp_group_for(parse_ade("A4"), 5);
    REQUIRE(a4);
    CHECK(a4->group == "mu_5");
    CHECK(a4->length == 5);
    CHECK_FALSE(a4->etale);
    CHECK(rdp_group_for(parse_ade("A4"), 3)->etale);
    CHECK_FALSE(rdp_group_for(parse_ade("D5"), 2).has_value());
    auto d5 = rdp_group_for(parse_ade("D5"), 3);
    REQUIRE(d5);
    CHECK(d5->length == 12);
    CHECK_FALSE(d5->etale);
    CHECK_FALSE(rdp_group_for(parse_ade("E8"), 5).has_value());
    CHECK(rdp_group_for(parse_ade("E8"), 7)->group == "BI_120");
    for (auto name : {"A1", "A6", "D4", "D9", "E6", "E7", "E8"}) {
        auto t = parse_ade(name);
        auto r = rdp_group_for(t, 0);
        REQUIRE(r);
        auto e = make_entry(r->family, r->params, 0);
        CHECK(e.length == ade_length(t));
        CHECK(e.length == r->length);
    }
    CHECK(error_kind([] { parse_ade("F4"); }) == ErrorKind::BadInput);
}
