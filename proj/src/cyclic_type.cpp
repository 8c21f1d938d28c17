#include "lrq/cyclic_type.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

void validate(const CyclicType& t) {
    if (t.n < 1) raise(ErrorKind::BadInput, "order must be positive");
    if (t.weights.empty()) raise(ErrorKind::BadInput, "need at least one weight");
    for (auto q : t.weights)
        if (std::gcd(nt::mod(q, t.n), t.n) != 1)
            raise(ErrorKind::BadInput, "weight " + std::to_string(q) + " is not a unit mod " + std::to_string(t.n));
}

CyclicType canonical_toric_form(const CyclicType& t) {
    validate(t);
    CyclicType best{t.n, std::vector<std::int64_t>(t.weights.size(), 1)};
    if (t.n == 1) return best;
    bool have = false;
    std::vector<std::int64_t> cur(t.weights.size());
    for (auto a : nt::units_mod(t.n)) {
        for (std::size_t i = 0; i < cur.size(); ++i)
            cur[i] = static_cast<std::int64_t>(static_cast<__int128>(a) * nt::mod(t.weights[i], t.n) % t.n);
        std::sort(cur.begin(), cur.end());
        if (!have || cur < best.weights) {
            best.weights = cur;
            have = true;
        }
    }
    return best;
}

std::string format_type(const CyclicType& t) {
    std::string s = "1/" + std::to_string(t.n) + "(";
    for (std::size_t i = 0; i < t.weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.weights[i]);
    }
    return s + ")";
}

CyclicType parse_type(std::string_view text) {
    auto fail = [&]() -> void {
        raise(ErrorKind::ParseError, "expected a type like 1/n(q1,q2,q3), got '" + std::string(text) + "'");
    };
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.rfind("1/", 0) != 0 || s.empty() || s.back() != ')') fail();
    auto open = s.find('(');
    if (open == std::string::npos) fail();
    auto read_int = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) fail();
        return v;
    };
    CyclicType t;
    t.n = read_int(std::string_view(s).substr(2, open - 2));
    std::string_view body = std::string_view(s).substr(open + 1, s.size() - open - 2);
    while (true) {
        auto comma = body.find(',');
        t.weights.push_back(read_int(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    validate(t);
    return t;
}

} // namespace lrq
