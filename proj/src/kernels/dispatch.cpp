#include "lrq/kernels.hpp"

#include <atomic>

namespace lrq::kernels {

namespace {

constexpr std::uint64_t kLane = std::uint64_t{1} << 31;
constexpr std::uint64_t kSafe = std::uint64_t{1} << 62;

Backend detect() {
#if defined(__x86_64__) && defined(LRQ_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect()};
    return b;
}

} // namespace

bool avx2_available() { return detect() == Backend::Avx2; }

void set_backend(Backend b) {
    if (b == Backend::Auto || (b == Backend::Avx2 && !avx2_available())) b = detect();
    current().store(b, std::memory_order_relaxed);
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

std::uint64_t max_abs(const std::int64_t* v, std::size_t n) {
    if (active_backend() == Backend::Avx2) return avx2::max_abs(v, n);
    return scalar::max_abs(v, n);
}

void accumulate_scaled(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                       std::size_t n) {
    if (n == 0 || scale == 0) return;
    if (active_backend() == Backend::Avx2 && n >= 8) {
        std::uint64_t s = scale < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(scale)
                                    : static_cast<std::uint64_t>(scale);
        if (s < kLane) {
            std::uint64_t ms = avx2::max_abs(src, n);
            if (ms < kLane && avx2::max_abs(out, n) < kSafe - s * ms) {
                avx2::accumulate_scaled_small(out, scale, src, n);
                return;
            }
        }
    }
    scalar::accumulate_scaled(out, scale, src, n);
}

} // namespace lrq::kernels
