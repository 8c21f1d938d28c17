#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lrq {

/// mu_n acting by zeta -> diag(zeta^q_1, ..., zeta^q_d).
struct CyclicType {
    std::int64_t n = 1;
    std::vector<std::int64_t> weights;

    std::size_t dimension() const { return weights.size(); }
    friend bool operator==(const CyclicType&, const CyclicType&) = default;
};

/// BadInput unless n >= 1, d >= 1 and every weight is a unit mod n.
void validate(const CyclicType& t);

/// Lexicographic minimum of the sorted (a q_1 mod n, ..., a q_d mod n) over
/// units a. For n = 1 every weight is reported as 1.
CyclicType canonical_toric_form(const CyclicType& t);

/// "1/n(q1,q2,...)".
std::string format_type(const CyclicType& t);
/// Parses "1/n(q1,...)"; ParseError on bad syntax, BadInput on non-units.
CyclicType parse_type(std::string_view text);

} // namespace lrq
