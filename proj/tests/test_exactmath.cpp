#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lrq/cycmatrix.hpp"
#include "lrq/cyclotomic.hpp"
#include "lrq/json_codec.hpp"
#include "lrq/numtheory.hpp"
#include "lrq/rational.hpp"
#include "support.hpp"

using namespace lrq;

namespace {

CycNum random_cyc(std::mt19937_64& rng, std::int64_t m) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
    std::vector<Rational> c;
    for (std::int64_t i = 0; i < m; ++i) c.emplace_back(coef(rng), den(rng));
    return CycNum::from_poly(m, c);
}

int coef_sparse(int trial) { return (trial % 5) - 2; }

int mobius(std::int64_t n) {
    auto f = nt::prime_factors(n);
    for (auto p : f)
        if ((n / p) % p == 0) return 0;
    return f.size() % 2 ? -1 : 1;
}

} // namespace

TEST_CASE("rational normal form and printing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(3).str() == "3/1");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(error_kind([] { Rational::parse("1/x"); }) == ErrorKind::ParseError);
}

TEST_CASE("rational arithmetic is checked") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK(error_kind([&] { (void)(Rational(big) + Rational(1)); }) == ErrorKind::ArithmeticOverflow);
    CHECK(error_kind([&] { (void)(Rational(big) * Rational(2)); }) == ErrorKind::ArithmeticOverflow);
    CHECK(error_kind([] { Rational(1, 0); }) == ErrorKind::DivisionByZero);
    CHECK(error_kind([] { (void)Rational(0).inverse(); }) == ErrorKind::DivisionByZero);
    // Cross-reduction keeps in-range results in range.
    CHECK(Rational(big, 3) * Rational(3, big) == Rational(1));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(std::find(p105.begin(), p105.end(), -2) != p105.end());
    for (std::int64_t m = 1; m <= 300; ++m)
        CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(m).size()) == nt::euler_phi(m) + 1);
}

TEST_CASE("roots of unity") {
    for (std::int64_t m : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 30, 60, 105}) {
        auto z = root_of_unity(m);
        CHECK(z.pow(m).is_one());
        CHECK(z.degree() == static_cast<std::size_t>(nt::euler_phi(m)));
        CycNum s(0);
        for (auto k : nt::units_mod(m)) s += root_of_unity(m, k);
        CHECK(s == CycNum(mobius(m)));
        auto v = root_of_unity(m, 1).evaluate();
        CHECK(std::abs(v - std::polar(1.0, 2 * M_PI / static_cast<double>(m))) < 1e-9);
    }
    CHECK(root_of_unity(6) == -root_of_unity(3, 2));
    CHECK(root_of_unity(4, 2) == CycNum(-1));
    CHECK(error_kind([] { root_of_unity(kMaxConductor + 1); }) == ErrorKind::ConductorTooLarge);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240611);
    for (std::int64_t m : {3, 5, 7, 8, 12, 15, 20, 24, 60}) {
        for (int trial = 0; trial < 15; ++trial) {
            auto a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == CycNum(0));
            // Dense inverses can leave int64; they must then raise, never be wrong.
            if (!a.is_zero()) {
                try {
                    auto ai = a.inverse();
                    CHECK((a * ai).is_one());
                    CHECK((b * ai) * a == b);
                } catch (const Error& e) {
                    CHECK(e.kind() == ErrorKind::ArithmeticOverflow);
                }
            }
            // Sparse elements stay small enough to invert exactly.
            auto s = CycNum(1 + trial % 3) + CycNum(Rational(coef_sparse(trial), 2)) * root_of_unity(m, 1 + trial % (m - 1));
            if (!s.is_zero()) CHECK((s * s.inverse()).is_one());
            CHECK((a * b).hash() == (b * a).hash());
        }
    }
}

TEST_CASE("mixed conductors promote to the compositum") {
    auto s = root_of_unity(3) + root_of_unity(4);
    CHECK(s.conductor() == 12);
    CHECK(promote(root_of_unity(3), 12) == root_of_unity(12, 4));
    CHECK(error_kind([] { promote(root_of_unity(3), 4); }) == ErrorKind::NotDivisible);
    auto back = demote(root_of_unity(12, 4), 3);
    REQUIRE(back.has_value());
    CHECK(back->conductor() == 3);
    CHECK(*back == root_of_unity(3));
    CHECK_FALSE(demote(root_of_unity(12), 3).has_value());
    CHECK(common_conductor(8, 12) == 24);
    CHECK(error_kind([] { common_conductor(2520, 11); }) == ErrorKind::ConductorTooLarge);
}

TEST_CASE("rational elements") {
    auto r = CycNum::rational(Rational(3, 7), 15);
    CHECK(r.is_rational());
    CHECK(r.rational_part() == Rational(3, 7));
    CHECK(r == CycNum(Rational(3, 7)));
    auto sqrt_m3 = root_of_unity(3) - root_of_unity(3, 2);
    CHECK((sqrt_m3 * sqrt_m3) == CycNum(-3));
    CHECK_FALSE(sqrt_m3.is_rational());
}

TEST_CASE("matrices") {
    auto z = root_of_unity(5);
    auto a = CycMatrix::diagonal({z, z.inverse()});
    CHECK(a.det().is_one());
    CHECK(a.trace() == z + z.inverse());
    auto p = CycMatrix::identity(2, 5);
    for (int i = 0; i < 5; ++i) p = p * a;
    CHECK(p.is_identity());
    auto sing = CycMatrix::from_rows({{z, CycNum(1)}, {z * z, z}});
    CHECK(sing.rank() == 1);
    CHECK(sing.det().is_zero());
    CHECK(CycMatrix::identity(4).rank() == 4);
    CHECK(error_kind([] { (void)(CycMatrix::identity(2) * CycMatrix::identity(3)); }) ==
          ErrorKind::DimensionMismatch);

    // det of a 4x4 upper triangular matrix with a permutation.
    std::vector<std::vector<CycNum>> rows(4, std::vector<CycNum>(4, CycNum(0)));
    rows[0][1] = z;
    rows[1][0] = CycNum(2);
    rows[2][2] = CycNum(3);
    rows[3][3] = z * z;
    rows[0][3] = CycNum(5);
    CHECK(CycMatrix::from_rows(rows).det() == CycNum(-6) * z * z * z);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(7);
    for (std::int64_t m : {1, 4, 9, 20}) {
        auto x = random_cyc(rng, m);
        CHECK(json::decode_cycnum(json::encode(x)) == x);
        auto a = CycMatrix::from_rows({{x, CycNum(1)}, {CycNum(Rational(-1, 2)), x * x}});
        CHECK(json::decode_matrix(json::encode(a)) == a);
    }
    CHECK(json::decode_rational(json::encode(Rational(-4, 6))) == Rational(-2, 3));
    CHECK(error_kind([] { json::decode_matrix(nlohmann::json::parse(R"({"rows":2})")); }) == ErrorKind::ParseError);
}
