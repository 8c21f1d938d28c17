#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Integer vector kernels behind cyclotomic multiplication. Each kernel has a
// scalar reference and an AVX2 variant; dispatch picks one at runtime.
namespace lrq::kernels {

enum class Backend { Auto, Scalar, Avx2 };

bool avx2_available();
// Forces a backend (tests). Avx2 falls back to Scalar when the CPU lacks it.
void set_backend(Backend b);
Backend active_backend();
std::string_view backend_name(Backend b);

// out[i] += scale * src[i] for i < n. Raises ArithmeticOverflow instead of
// wrapping.
void accumulate_scaled(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                       std::size_t n);

// max |v[i]| as unsigned, so INT64_MIN is representable.
std::uint64_t max_abs(const std::int64_t* v, std::size_t n);

namespace scalar {
void accumulate_scaled(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                       std::size_t n);
std::uint64_t max_abs(const std::int64_t* v, std::size_t n);
} // namespace scalar

namespace avx2 {
// Caller guarantees |scale|, |src[i]| < 2^31 and no lane overflows.
void accumulate_scaled_small(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                             std::size_t n);
std::uint64_t max_abs(const std::int64_t* v, std::size_t n);
} // namespace avx2

} // namespace lrq::kernels
