#include "lrq/kernels.hpp"

#include "lrq/numtheory.hpp"

namespace lrq::kernels::scalar {

void accumulate_scaled(std::int64_t* out, std::int64_t scale, const std::int64_t* src,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = nt::checked_add(out[i], nt::checked_mul(scale, src[i]));
}

std::uint64_t max_abs(const std::int64_t* v, std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a = v[i] < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v[i])
                                   : static_cast<std::uint64_t>(v[i]);
        if (a > m) m = a;
    }
    return m;
}

} // namespace lrq::kernels::scalar
