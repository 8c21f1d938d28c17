#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrq/ade.hpp"
#include "lrq/classify.hpp"
#include "lrq/cyclic_type.hpp"
#include "lrq/lrgs.hpp"

namespace lrq {

/// Quotient singularity of a very small action, d >= 2.
struct LrqSingularity {
    LrRepresentation rep;

    std::size_t dimension() const { return rep.dim; }
    std::int64_t characteristic() const { return rep.scheme.p; }
};

/// NotVerySmall when lambda != 0; BadDimension when d < 2.
LrqSingularity make_singularity(LrRepresentation rep);

struct ClassGroupFactor {
    std::int64_t order = 1;
    std::int64_t p_part = 1;       // dual of a mu-type (infinitesimal) piece
    std::int64_t prime_to_p = 1;   // dual of an etale piece
};

struct EtaleFundamentalGroup {
    std::int64_t order = 1;
    AbelianStructure abelianization;
    /// Generators of G whose class in G / G° is nontrivial.
    std::vector<CycMatrix> generators;
};

struct SingularityInvariants {
    std::int64_t length = 1;
    Rational f_signature;
    AbelianStructure class_group;
    std::vector<ClassGroupFactor> class_group_dual;
    EtaleFundamentalGroup pi1_etale;
    bool gorenstein = false;
};

SingularityInvariants invariants(const LrqSingularity& x);

/// Minimal generators of {e in N^d : sum q_i e_i = 0 mod n}, lexicographic.
std::vector<std::vector<std::int64_t>> hilbert_basis(const CyclicType& t);
/// (1/n) #{e in [0,n)^d : e not >= any nonzero monoid element}.
Rational hilbert_kunz(const CyclicType& t);
/// The cyclic type of a singularity whose group is cyclic and acts diagonally;
/// NotImplementedForNonAbelian otherwise.
CyclicType cyclic_type_of(const LrqSingularity& x);
Rational hilbert_kunz(const LrqSingularity& x);

/// a_1 - 1/(a_2 - 1/(...)) = n/q with all a_i >= 2. BadInput unless 0 < q < n, gcd = 1.
std::vector<std::int64_t> hj_fraction(std::int64_t n, std::int64_t q);
/// A_0 = 1, A_{-1} = 0, A_i = a_i A_{i-1} - A_{i-2}; returns A_0 ... A_k.
std::vector<std::int64_t> continuants(const std::vector<std::int64_t>& a);

enum class GraphShape { Chain, Star, Other };

/// Weighted dual graph: vertex self-intersections and undirected edges.
struct DualGraph {
    std::vector<std::int64_t> self_intersection;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct ShapeInfo {
    GraphShape shape = GraphShape::Other;
    /// Sorted branch discriminants for a star.
    std::vector<std::int64_t> branches;
};

ShapeInfo classify_shape(const DualGraph& g);
DualGraph chain_graph(const std::vector<std::int64_t>& a);
DualGraph resolution_chain(std::int64_t n, std::int64_t q);
/// Dynkin diagram of an ADE type as a graph of (-2)-curves.
DualGraph ade_graph(const AdeType& t);

struct FRegularity {
    bool f_regular = false;
    std::string reason;
};
/// Chain/star test with characteristic gates; rationality is assumed.
FRegularity is_f_regular_graph(const DualGraph& g, std::int64_t p);

struct RdpRealization {
    Family family = Family::Mu;
    Params params;
    std::string group; // e.g. "mu_5", "BD_3", "BI_120"
    std::int64_t length = 0;
    bool etale = false;
};
/// nullopt when the rational double point is not realized in characteristic p.
std::optional<RdpRealization> rdp_group_for(const AdeType& t, std::int64_t p);

} // namespace lrq
