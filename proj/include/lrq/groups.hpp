#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrq/cycmatrix.hpp"

namespace lrq {

/// Invariant factors d_1 | d_2 | ... | d_k, each >= 2. Empty means trivial.
struct AbelianStructure {
    std::vector<std::int64_t> factors;

    std::int64_t order() const;
    bool is_cyclic() const { return factors.size() <= 1; }
    friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

/// Finite group realized by matrices, with the full Cayley table.
/// Element 0 is the identity; order is BFS order from the identity.
class FiniteMatrixGroup {
public:
    using Index = std::uint32_t;

    std::size_t order() const { return elements_.size(); }
    std::size_t dimension() const { return dim_; }
    std::int64_t conductor() const { return conductor_; }

    const CycMatrix& element(Index i) const { return elements_[i]; }
    const std::vector<CycMatrix>& elements() const { return elements_; }
    Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
    Index inverse(Index a) const { return inverse_[a]; }
    std::int64_t element_order(Index a) const { return orders_[a]; }
    Index power(Index a, std::int64_t k) const;

    /// Element index of each generator, in the order given to close().
    const std::vector<Index>& generators() const { return gens_; }
    const std::vector<CycMatrix>& generator_matrices() const { return gen_mats_; }

    /// Generator positions whose product (left to right) is element i.
    std::vector<std::size_t> word(Index i) const;
    /// BFS tree: element i = element(parent(i)) * generator(parent_generator(i)).
    Index parent(Index i) const { return parent_[i]; }
    std::size_t parent_generator(Index i) const { return parent_gen_[i]; }
    std::optional<Index> index_of(const CycMatrix& a) const;

    /// Subgroup generated by the given elements, by table closure. Sorted.
    std::vector<Index> subgroup(const std::vector<Index>& gens) const;

    bool is_abelian() const;
    bool is_cyclic() const;
    bool commute(Index a, Index b) const { return mul(a, b) == mul(b, a); }

private:
    friend FiniteMatrixGroup close(const std::vector<CycMatrix>&, std::size_t, std::size_t);

    std::size_t dim_ = 0;
    std::int64_t conductor_ = 1;
    std::vector<CycMatrix> elements_;
    std::vector<CycMatrix> gen_mats_;
    std::vector<Index> gens_;
    std::vector<Index> table_;
    std::vector<Index> inverse_;
    std::vector<std::int64_t> orders_;
    std::vector<Index> parent_;
    std::vector<std::size_t> parent_gen_;
};

/// Group cap from LRQ_CAP, default 1024.
std::size_t default_cap();

/// BFS closure under right multiplication by the generators. `dim` is only
/// consulted when the generator list is empty.
FiniteMatrixGroup close(const std::vector<CycMatrix>& generators, std::size_t dim = 0,
                        std::size_t cap = default_cap());

/// Elements whose order is a power of p (the identity included).
std::vector<FiniteMatrixGroup::Index> p_elements(const FiniteMatrixGroup& g, std::int64_t p);
bool unique_abelian_sylow(const FiniteMatrixGroup& g, std::int64_t p);

std::vector<FiniteMatrixGroup::Index> commutator_subgroup(const FiniteMatrixGroup& g);

/// Invariant factors of h/k, where k is normal in h and h/k is abelian. Both
/// are element-index sets of g.
AbelianStructure quotient_invariant_factors(const FiniteMatrixGroup& g,
                                            const std::vector<FiniteMatrixGroup::Index>& h,
                                            const std::vector<FiniteMatrixGroup::Index>& k);

AbelianStructure abelianization(const FiniteMatrixGroup& g);
bool all_abelian_subgroups_cyclic(const FiniteMatrixGroup& g);

} // namespace lrq
