#pragma once

#include <json.hpp>

#include "lrq/cycmatrix.hpp"
#include "lrq/cyclotomic.hpp"
#include "lrq/rational.hpp"

namespace lrq::json {

using nlohmann::json;

json encode(const Rational& r);
json encode(const CycNum& x);
json encode(const CycMatrix& a);

Rational decode_rational(const json& j);
CycNum decode_cycnum(const json& j);
CycMatrix decode_matrix(const json& j);

} // namespace lrq::json
