#include <doctest.h>

#include "lrq/classify.hpp"
#include "lrq/groups.hpp"
#include "lrq/oracles.hpp"
#include "support.hpp"

using namespace lrq;

namespace {

FiniteMatrixGroup fam(Family f, const Params& ps = {}) { return close(family_generators(f, ps)); }

FiniteMatrixGroup klein_four() {
    return close({CycMatrix::diagonal({CycNum(-1), CycNum(1)}), CycMatrix::diagonal({CycNum(1), CycNum(-1)})});
}

} // namespace

TEST_CASE("closure orders") {
    CHECK(fam(Family::BT).order() == 24);
    CHECK(fam(Family::BO).order() == 48);
    CHECK(fam(Family::BI).order() == 120);
    CHECK(fam(Family::BD, {{"n", 5}}).order() == 20);
    CHECK(fam(Family::Mu, {{"n", 9}}).order() == 9);
    CHECK(klein_four().order() == 4);
    auto trivial = close({}, 3);
    CHECK(trivial.order() == 1);
    CHECK(trivial.dimension() == 3);
}

TEST_CASE("cayley table is a group law") {
    auto g = fam(Family::BO);
    using I = FiniteMatrixGroup::Index;
    const auto n = static_cast<I>(g.order());
    for (I a = 0; a < n; a += 5)
        for (I b = 0; b < n; b += 3) {
            CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
            for (I c = 0; c < n; c += 7) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    for (I a = 0; a < n; ++a) {
        CHECK(g.mul(a, g.inverse(a)) == 0);
        CHECK(48 % g.element_order(a) == 0);
        CHECK(g.element_order(a) == oracle::matrix_order(g.element(a), 48));
        CHECK(g.index_of(g.element(a)) == a);
        CycMatrix w = CycMatrix::identity(2, g.conductor());
        for (auto k : g.word(a)) w = w * g.generator_matrices()[k];
        CHECK(w == g.element(a));
    }
}

TEST_CASE("cap and singular generators") {
    CHECK(error_kind([] { close(family_generators(Family::BI, {}), 0, 10); }) == ErrorKind::CapExceeded);
    auto sing = CycMatrix::diagonal({CycNum(0), CycNum(1)});
    CHECK(error_kind([&] { close({sing}); }) == ErrorKind::NotInvertible);
    CHECK(error_kind([] { close({CycMatrix::identity(2), CycMatrix::identity(3)}); }) == ErrorKind::DimensionMismatch);
    // Infinite order: diag(2, 1/2) never closes.
    auto inf = CycMatrix::diagonal({CycNum(2), CycNum(Rational(1, 2))});
    CHECK(error_kind([&] { close({inf}, 0, 32); }) == ErrorKind::CapExceeded);
}

TEST_CASE("abelian subgroups are cyclic") {
    CHECK_FALSE(all_abelian_subgroups_cyclic(klein_four()));
    CHECK(all_abelian_subgroups_cyclic(fam(Family::Mu, {{"n", 12}})));
    CHECK(all_abelian_subgroups_cyclic(close({}, 2)));
    for (auto f : {Family::BT, Family::BO, Family::BI}) {
        auto g = fam(f);
        CHECK(all_abelian_subgroups_cyclic(g));
        CHECK(oracle::literal_abelian_subgroups_cyclic(g.elements()));
    }
    for (std::int64_t n = 2; n <= 8; ++n) {
        auto g = fam(Family::BD, {{"n", n}});
        CHECK(all_abelian_subgroups_cyclic(g) == oracle::literal_abelian_subgroups_cyclic(g.elements()));
    }
    CHECK_FALSE(oracle::literal_abelian_subgroups_cyclic(klein_four().elements()));
}

TEST_CASE("commutator subgroups against the brute-force oracle") {
    for (auto f : {Family::BT, Family::BO, Family::BI}) {
        auto g = fam(f);
        CHECK(commutator_subgroup(g).size() == oracle::commutator_subgroup(g.elements()).size());
    }
    for (std::int64_t n = 2; n <= 10; ++n) {
        auto g = fam(Family::BD, {{"n", n}});
        auto ab = abelianization(g);
        auto stats = oracle::abelianization_stats(g.elements());
        CHECK(ab.order() == stats.order);
        CHECK(ab.factors.back() == stats.exponent);
    }
}

TEST_CASE("invariant factors") {
    CHECK(abelianization(fam(Family::Mu, {{"n", 6}})).factors == std::vector<std::int64_t>{6});
    CHECK(abelianization(klein_four()).factors == std::vector<std::int64_t>{2, 2});
    CHECK(abelianization(fam(Family::BI)).factors.empty());
    CHECK(abelianization(fam(Family::BT)).factors == std::vector<std::int64_t>{3});
    auto g = fam(Family::MuNQ, {{"n", 12}, {"q", 5}});
    CHECK(g.is_cyclic());
    CHECK(g.is_abelian());
}

TEST_CASE("sylow subgroups") {
    auto bt = fam(Family::BT);
    CHECK_FALSE(unique_abelian_sylow(bt, 2)); // quaternion Sylow
    CHECK_FALSE(unique_abelian_sylow(bt, 3)); // four Sylow 3-subgroups
    CHECK(unique_abelian_sylow(bt, 5));
    auto bd = fam(Family::BD, {{"n", 9}});
    CHECK(unique_abelian_sylow(bd, 3));
    CHECK(p_elements(bd, 3).size() == 9);
    CHECK(unique_abelian_sylow(klein_four(), 2));
    CHECK(unique_abelian_sylow(bt, 0));
}
