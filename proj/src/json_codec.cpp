#include "lrq/json_codec.hpp"

#include "lrq/errors.hpp"

namespace lrq::json {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

std::int64_t get_int(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        bad(std::string("expected integer field '") + key + "'");
    return j.at(key).get<std::int64_t>();
}

} // namespace

json encode(const Rational& r) { return r.str(); }

json encode(const CycNum& x) {
    json terms = json::array();
    for (std::size_t i = 0; i < x.degree(); ++i) {
        Rational c = x.coeff(i);
        if (!c.is_zero()) terms.push_back(json::array({i, c.str()}));
    }
    return json{{"conductor", x.conductor()}, {"terms", terms}};
}

json encode(const CycMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(encode(a.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"conductor", a.conductor()}, {"entries", rows}};
}

Rational decode_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    bad("rational must be a \"num/den\" string or an integer");
}

CycNum decode_cycnum(const json& j) {
    if (j.is_number_integer() || j.is_string()) return CycNum(decode_rational(j));
    std::int64_t m = get_int(j, "conductor");
    if (m < 1) bad("conductor must be positive");
    if (!j.contains("terms") || !j.at("terms").is_array()) bad("CycNum needs a 'terms' array");
    std::vector<Rational> coeffs;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            bad("each term must be [index, \"num/den\"]");
        auto i = t[0].get<std::int64_t>();
        if (i < 0) bad("term index must be non-negative");
        if (static_cast<std::size_t>(i) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(i) + 1);
        coeffs[static_cast<std::size_t>(i)] += decode_rational(t[1]);
    }
    return CycNum::from_poly(m, coeffs);
}

CycMatrix decode_matrix(const json& j) {
    std::int64_t rows = get_int(j, "rows");
    std::int64_t cols = get_int(j, "cols");
    if (rows < 1 || cols < 1) bad("matrix dimensions must be positive");
    if (!j.contains("entries") || !j.at("entries").is_array() ||
        j.at("entries").size() != static_cast<std::size_t>(rows))
        bad("'entries' must list every row");
    std::vector<std::vector<CycNum>> out;
    for (const auto& row : j.at("entries")) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) bad("row length differs from 'cols'");
        std::vector<CycNum> r;
        for (const auto& x : row) r.push_back(decode_cycnum(x));
        out.push_back(std::move(r));
    }
    CycMatrix a = CycMatrix::from_rows(out);
    if (j.contains("conductor")) {
        std::int64_t m = get_int(j, "conductor");
        if (m < 1) bad("conductor must be positive");
        a = a.with_conductor(common_conductor(m, a.conductor()));
    }
    return a;
}

} // namespace lrq::json
