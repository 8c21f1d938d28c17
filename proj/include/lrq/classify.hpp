#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrq/lrgs.hpp"

namespace lrq {

enum class Family {
    Mu,
    MuNQ,
    BD,
    BT,
    BO,
    BI,
    Brieskorn2a,
    Brieskorn2b,
    Brieskorn3a,
    Brieskorn3b,
    Brieskorn4,
    Brieskorn5,
    Metacyclic3,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Named integer parameters in a fixed per-family order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;
std::int64_t param(const Params& ps, std::string_view key);
std::optional<std::int64_t> find_param(const Params& ps, std::string_view key);

/// Generators of a family member. Parameters:
///   Mu {n} in SL2 as diag(a, a^-1), or Mu {n, q1, q2} as diag(a, a^q1, a^q2);
///   MuNQ {n, q}; BD {n}; BT; BO; BI;
///   Brieskorn2a/2b {m, n}; Brieskorn3a/3b/4/5 {m}; Metacyclic3 {m, f, N, r}.
/// InvalidParameters when the tuple violates the family's conditions.
std::vector<CycMatrix> family_generators(Family f, const Params& ps);
std::int64_t family_length(Family f, const Params& ps);
/// Characteristic gate exactly as in the classification; p = 0 passes all.
bool family_gate(Family f, const Params& ps, std::int64_t p);

/// split metacyclic mu(m, n, r): conditions of the definition, p not dividing e.
struct MetacyclicParams {
    std::int64_t m = 1, n = 1, r = 1;
    std::int64_t e() const;
    bool valid(std::int64_t p = 0) const;
    bool very_small() const;
};

struct CatalogEntry {
    Family family = Family::Mu;
    Params params;
    LrGroupScheme scheme;
    LrRepresentation rep;
    std::int64_t length = 0;
    std::int64_t lambda = 0;
    bool gorenstein = false;
    std::string note;
};

/// Closure, scheme validation in characteristic p, and lambda/faithfulness check.
CatalogEntry make_entry(Family f, const Params& ps, std::int64_t p);

struct Gl3Bounds {
    std::int64_t max_m = 50;
    std::int64_t max_length = 500;
};

std::vector<CatalogEntry> sl2_catalog(std::int64_t p, std::int64_t max_length);
std::vector<CatalogEntry> gl2_catalog(std::int64_t p, std::int64_t max_length);
std::vector<CatalogEntry> sl3_catalog(std::int64_t p, std::int64_t max_m);
std::vector<CatalogEntry> gl3_catalog(std::int64_t p, const Gl3Bounds& bounds);

} // namespace lrq
