#pragma once

// Independent reference computations used by the tests and the acceptance
// suite. They share only the matrix arithmetic with the library.

#include <cstdint>
#include <set>
#include <vector>

#include "lrq/ade.hpp"
#include "lrq/deform.hpp"
#include "lrq/groups.hpp"
#include "lrq/rational.hpp"

namespace lrq::oracle {

/// Order of a matrix by repeated multiplication; 0 if above `limit`.
std::int64_t matrix_order(const CycMatrix& a, std::int64_t limit);

/// Group generated by all commutators, built from the element matrices.
std::vector<CycMatrix> commutator_subgroup(const std::vector<CycMatrix>& elements);

/// Order and exponent of G / [G, G] from matrices alone.
struct AbelianizationStats {
    std::int64_t order = 1;
    std::int64_t exponent = 1;
};
AbelianizationStats abelianization_stats(const std::vector<CycMatrix>& elements);

/// Some element has order |G|.
bool literal_is_cyclic(const std::vector<CycMatrix>& elements);
/// Every commuting pair generates a cyclic group, checked on matrices.
bool literal_abelian_subgroups_cyclic(const std::vector<CycMatrix>& elements);

/// a_1 - 1/(a_2 - 1/(...)).
Rational hj_evaluate(const std::vector<std::int64_t>& a);

/// Hilbert basis and e_HK of 1/n(q) by prefix counts of monoid points in [0,n]^d.
std::vector<std::vector<std::int64_t>> hilbert_basis_dp(std::int64_t n, const std::vector<std::int64_t>& q);
Rational hilbert_kunz_dp(std::int64_t n, const std::vector<std::int64_t>& q);

/// Types of all reflection-closed subsets of the roots of A_n (n <= 5) or D_n (4 <= n <= 5).
std::set<RootDiagram> brute_root_subsystems(const AdeType& t);

} // namespace lrq::oracle
