#include "lrq/ade.hpp"

#include <charconv>

#include "lrq/errors.hpp"

namespace lrq {

bool valid_ade(char kind, int n) {
    switch (kind) {
    case 'A': return n >= 1;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    default: return false;
    }
}

AdeType parse_ade(std::string_view text) {
    if (text.size() < 2) raise(ErrorKind::BadInput, "expected an ADE type like A4, D5 or E8");
    char kind = text[0];
    if (kind >= 'a' && kind <= 'z') kind = static_cast<char>(kind - 'a' + 'A');
    int n = 0;
    auto body = text.substr(1);
    if (!body.empty() && body.front() == '_') body.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size() || !valid_ade(kind, n))
        raise(ErrorKind::BadInput, "not an ADE type: '" + std::string(text) + "'");
    return {kind, n};
}

std::int64_t ade_length(const AdeType& t) {
    switch (t.kind) {
    case 'A': return t.n + 1;
    case 'D': return 4 * static_cast<std::int64_t>(t.n - 2);
    default: return t.n == 6 ? 24 : t.n == 7 ? 48 : 120;
    }
}

} // namespace lrq
