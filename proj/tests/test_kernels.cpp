#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "lrq/cyclotomic.hpp"
#include "lrq/kernels.hpp"
#include "support.hpp"

using namespace lrq;
namespace k = lrq::kernels;

namespace {

struct BackendGuard {
    ~BackendGuard() { k::set_backend(k::Backend::Auto); }
};

std::vector<std::int64_t> random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("scalar and avx2 multiply-accumulate agree") {
    if (!k::avx2_available()) {
        MESSAGE("no AVX2 on this CPU; only the scalar path is exercised");
        return;
    }
    std::mt19937_64 rng(99);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 1001u}) {
        for (std::int64_t bound : {1ll, 1000ll, (1ll << 31) - 1}) {
            auto src = random_vec(rng, n, bound);
            auto out = random_vec(rng, n, 1ll << 40);
            auto a = out, b = out;
            std::int64_t scale = std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
            k::scalar::accumulate_scaled(a.data(), scale, src.data(), n);
            k::avx2::accumulate_scaled_small(b.data(), scale, src.data(), n);
            CHECK(a == b);
        }
    }
}

TEST_CASE("max_abs agrees and handles the minimum") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1u, 2u, 4u, 7u, 33u, 256u}) {
        auto v = random_vec(rng, n, std::numeric_limits<std::int64_t>::max());
        auto s = k::scalar::max_abs(v.data(), n);
        if (k::avx2_available()) CHECK(k::avx2::max_abs(v.data(), n) == s);
        v[n / 2] = std::numeric_limits<std::int64_t>::min();
        CHECK(k::scalar::max_abs(v.data(), n) == (std::uint64_t{1} << 63));
        if (k::avx2_available()) CHECK(k::avx2::max_abs(v.data(), n) == (std::uint64_t{1} << 63));
    }
    CHECK(k::scalar::max_abs(nullptr, 0) == 0);
}

TEST_CASE("dispatched kernel raises on overflow under every backend") {
    BackendGuard guard;
    for (auto b : {k::Backend::Scalar, k::Backend::Avx2}) {
        k::set_backend(b);
        std::vector<std::int64_t> out(9, std::numeric_limits<std::int64_t>::max() - 1);
        std::vector<std::int64_t> src(9, 1);
        CHECK(error_kind([&] { k::accumulate_scaled(out.data(), 2, src.data(), out.size()); }) ==
              ErrorKind::ArithmeticOverflow);
        std::vector<std::int64_t> big(9, std::int64_t{1} << 40), acc(9, 0);
        k::accumulate_scaled(acc.data(), std::int64_t{1} << 20, big.data(), acc.size());
        CHECK(acc[8] == (std::int64_t{1} << 60));
    }
}

TEST_CASE("cyclotomic products are backend independent") {
    BackendGuard guard;
    std::mt19937_64 rng(11);
    for (std::int64_t m : {7, 16, 60, 105, 840}) {
        std::vector<Rational> ca, cb;
        std::uniform_int_distribution<int> d(-50, 50);
        for (std::int64_t i = 0; i < m; ++i) {
            ca.emplace_back(d(rng));
            cb.emplace_back(d(rng), 1 + (i % 3));
        }
        k::set_backend(k::Backend::Scalar);
        auto s = CycNum::from_poly(m, ca) * CycNum::from_poly(m, cb);
        k::set_backend(k::Backend::Avx2);
        auto v = CycNum::from_poly(m, ca) * CycNum::from_poly(m, cb);
        CHECK(s.numerators() == v.numerators());
        CHECK(s.denominator() == v.denominator());
    }
}

TEST_CASE("backend selection") {
    BackendGuard guard;
    k::set_backend(k::Backend::Scalar);
    CHECK(k::active_backend() == k::Backend::Scalar);
    k::set_backend(k::Backend::Avx2);
    CHECK(k::active_backend() == (k::avx2_available() ? k::Backend::Avx2 : k::Backend::Scalar));
    CHECK(k::backend_name(k::Backend::Scalar) == "scalar");
}
