#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrq/groups.hpp"

namespace lrq {

/// A finite linearly reductive group scheme, modeled by its characteristic
/// and its associated abstract group.
struct LrGroupScheme {
    std::int64_t p = 0;
    std::shared_ptr<const FiniteMatrixGroup> abs;
    /// Elements of the p-Sylow (the connected part G°).
    std::vector<FiniteMatrixGroup::Index> sylow;
    /// Cyclic decomposition of the p-Sylow: the mu_{p^k} factors.
    AbelianStructure sylow_structure;

    std::int64_t length() const { return static_cast<std::int64_t>(abs->order()); }
    std::int64_t connected_length() const { return static_cast<std::int64_t>(sylow.size()); }
    std::int64_t etale_length() const { return length() / connected_length(); }
    bool is_etale() const { return sylow.size() == 1; }
};

/// NotLinearlyReductive unless p = 0 or the p-Sylow is unique and abelian.
LrGroupScheme make_scheme(std::int64_t p, FiniteMatrixGroup abs);
LrGroupScheme make_scheme(std::int64_t p, std::shared_ptr<const FiniteMatrixGroup> abs);

/// Characteristic-zero representation of the abstract group standing in for
/// the representation of the scheme.
struct LrRepresentation {
    LrGroupScheme scheme;
    std::size_t dim = 0;
    std::vector<CycMatrix> generator_images;
    std::vector<CycMatrix> images; // one per element index
};

/// Checks every element-times-generator product against the table.
LrRepresentation make_representation(const LrGroupScheme& scheme, const std::vector<CycMatrix>& generator_images);
/// The defining representation: each element maps to its own matrix.
LrRepresentation natural_representation(const LrGroupScheme& scheme);
/// rho plus k copies of the trivial representation.
LrRepresentation add_trivial(const LrRepresentation& rep, std::size_t k = 1);

/// max over g != 1 of dim ker(rho(g) - I), by rank.
std::int64_t lambda(const LrRepresentation& rep);
/// Same maximum, with dim V^<g> = (1/ord g) sum_j tr rho(g^j).
std::int64_t lambda_character_sum(const LrRepresentation& rep);

struct Predicates {
    bool very_small = false;
    bool small = false;
    bool faithful = false;
    bool gorenstein = false;
};
Predicates predicates(const LrRepresentation& rep);

struct SchemeCharacter {
    std::vector<CycNum> values; // per element index
    bool trivial = true;
};
SchemeCharacter det_character(const LrRepresentation& rep);

/// Conjugation action on a generator x of the cyclic p-Sylow, g x g^-1 = x^c,
/// recorded as c mod p.
struct AdCharacter {
    std::int64_t p = 0;
    bool etale = false;
    bool trivial = true;
    FiniteMatrixGroup::Index sylow_generator = 0;
    std::vector<std::int64_t> generator_values; // c(g) mod p per group generator
    std::vector<std::int64_t> values;           // c(g) mod p per element
};
AdCharacter ad_character(const LrGroupScheme& scheme);

} // namespace lrq
