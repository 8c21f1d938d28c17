#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lrq {

/// Simply-laced Dynkin type: A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
struct AdeType {
    char kind = 'A';
    int n = 1;

    int rank() const { return n; }
    std::string str() const { return std::string(1, kind) + std::to_string(n); }
    friend auto operator<=>(const AdeType&, const AdeType&) = default;
};

bool valid_ade(char kind, int n);
/// "A4", "D5", "E8"; BadInput otherwise.
AdeType parse_ade(std::string_view text);
/// Length of the group scheme of the rational double point:
/// A_n -> n+1, D_n -> 4(n-2), E6 -> 24, E7 -> 48, E8 -> 120.
std::int64_t ade_length(const AdeType& t);

} // namespace lrq
