#include "lrq/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

using Index = FiniteMatrixGroup::Index;

std::int64_t AbelianStructure::order() const {
    std::int64_t n = 1;
    for (auto f : factors) n = nt::checked_mul(n, f);
    return n;
}

std::size_t default_cap() {
    if (const char* env = std::getenv("LRQ_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1024;
}

Index FiniteMatrixGroup::power(Index a, std::int64_t k) const {
    k = nt::mod(k, orders_[a]);
    Index r = 0;
    Index base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::vector<std::size_t> FiniteMatrixGroup::word(Index i) const {
    std::vector<std::size_t> w;
    while (i != 0) {
        w.push_back(parent_gen_[i]);
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::optional<Index> FiniteMatrixGroup::index_of(const CycMatrix& a) const {
    if (a.rows() != dim_ || a.cols() != dim_) return std::nullopt;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == a) return static_cast<Index>(i);
    return std::nullopt;
}

std::vector<Index> FiniteMatrixGroup::subgroup(const std::vector<Index>& gens) const {
    std::vector<char> in(order(), 0);
    std::vector<Index> out{0};
    in[0] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (Index g : gens) {
            Index x = mul(out[head], g);
            if (!in[x]) {
                in[x] = 1;
                out.push_back(x);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool FiniteMatrixGroup::is_abelian() const {
    for (Index a : gens_)
        for (Index b : gens_)
            if (!commute(a, b)) return false;
    return true;
}

bool FiniteMatrixGroup::is_cyclic() const {
    for (auto o : orders_)
        if (static_cast<std::size_t>(o) == order()) return true;
    return false;
}

FiniteMatrixGroup close(const std::vector<CycMatrix>& generators, std::size_t dim, std::size_t cap) {
    FiniteMatrixGroup g;
    std::int64_t m = 1;
    if (!generators.empty()) dim = generators[0].rows();
    if (dim == 0) raise(ErrorKind::BadDimension, "group dimension must be positive");
    for (const auto& a : generators) {
        if (a.rows() != dim || a.cols() != dim)
            raise(ErrorKind::DimensionMismatch, "generators must be square of one dimension");
        m = common_conductor(m, a.conductor());
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        g.gen_mats_.push_back(generators[i].with_conductor(m));
        if (g.gen_mats_.back().det().is_zero())
            raise(ErrorKind::NotInvertible, "generator " + std::to_string(i) + " is singular");
    }
    g.dim_ = dim;
    g.conductor_ = m;

    std::unordered_map<CycMatrix, Index, CycMatrixHash> seen;
    const std::size_t ng = generators.size();
    std::vector<std::vector<Index>> right(1);
    g.elements_.push_back(CycMatrix::identity(dim, m));
    g.parent_.push_back(0);
    g.parent_gen_.push_back(0);
    seen.emplace(g.elements_[0], 0);

    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        right[head].resize(ng);
        for (std::size_t k = 0; k < ng; ++k) {
            CycMatrix x = g.elements_[head] * g.gen_mats_[k];
            auto it = seen.find(x);
            if (it != seen.end()) {
                right[head][k] = it->second;
                continue;
            }
            if (g.elements_.size() >= cap)
                raise(ErrorKind::CapExceeded, "closure exceeds cap " + std::to_string(cap));
            auto idx = static_cast<Index>(g.elements_.size());
            seen.emplace(x, idx);
            g.elements_.push_back(std::move(x));
            g.parent_.push_back(static_cast<Index>(head));
            g.parent_gen_.push_back(k);
            right.emplace_back();
            right[head][k] = idx;
        }
    }

    for (std::size_t k = 0; k < ng; ++k) g.gens_.push_back(right[0][k]);

    // a * e_j = (a * e_parent(j)) * gen, so each column follows from an earlier one.
    const std::size_t n = g.elements_.size();
    g.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) g.table_[i * n] = static_cast<Index>(i);
    for (std::size_t j = 1; j < n; ++j) {
        const Index pj = g.parent_[j];
        const std::size_t gj = g.parent_gen_[j];
        for (std::size_t i = 0; i < n; ++i) g.table_[i * n + j] = right[g.table_[i * n + pj]][gj];
    }

    g.inverse_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.table_[i * n + j] == 0) {
                g.inverse_[i] = static_cast<Index>(j);
                break;
            }

    g.orders_.assign(n, 1);
    for (std::size_t i = 1; i < n; ++i) {
        std::int64_t k = 1;
        Index x = static_cast<Index>(i);
        while (x != 0) {
            x = g.table_[x * n + i];
            ++k;
        }
        g.orders_[i] = k;
    }
    return g;
}

std::vector<Index> p_elements(const FiniteMatrixGroup& g, std::int64_t p) {
    std::vector<Index> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        std::int64_t o = g.element_order(static_cast<Index>(i));
        if (o == 1 || (p >= 2 && nt::is_power_of(o, p))) out.push_back(static_cast<Index>(i));
    }
    return out;
}

bool unique_abelian_sylow(const FiniteMatrixGroup& g, std::int64_t p) {
    if (p < 2) return true;
    auto s = p_elements(g, p);
    if (static_cast<std::int64_t>(s.size()) != nt::p_part(static_cast<std::int64_t>(g.order()), p))
        return false;
    std::vector<char> in(g.order(), 0);
    for (Index x : s) in[x] = 1;
    for (Index a : s)
        for (Index b : s) {
            if (!in[g.mul(a, b)]) return false;
            if (!g.commute(a, b)) return false;
        }
    return true;
}

std::vector<Index> commutator_subgroup(const FiniteMatrixGroup& g) {
    const std::size_t n = g.order();
    std::vector<char> mark(n, 0);
    std::vector<Index> comms;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto ia = static_cast<Index>(a), ib = static_cast<Index>(b);
            Index c = g.mul(g.mul(ia, ib), g.mul(g.inverse(ia), g.inverse(ib)));
            if (!mark[c]) {
                mark[c] = 1;
                comms.push_back(c);
            }
        }
    return g.subgroup(comms);
}

AbelianStructure quotient_invariant_factors(const FiniteMatrixGroup& g, const std::vector<Index>& h,
                                            const std::vector<Index>& k) {
    std::vector<Index> kk = k.empty() ? std::vector<Index>{0} : k;
    std::vector<char> in_k(g.order(), 0);
    for (Index x : kk) in_k[x] = 1;
    std::vector<std::int64_t> found;
    std::size_t covered = kk.size();
    while (covered < h.size()) {
        // Order of each element modulo the current kernel; take a maximal one.
        Index best = 0;
        std::int64_t best_order = 1;
        for (Index x : h) {
            std::int64_t o = 1;
            Index y = x;
            while (!in_k[y]) {
                y = g.mul(y, x);
                ++o;
            }
            if (o > best_order) {
                best_order = o;
                best = x;
            }
        }
        found.push_back(best_order);
        kk.push_back(best);
        kk = g.subgroup(kk);
        std::fill(in_k.begin(), in_k.end(), 0);
        for (Index x : kk) in_k[x] = 1;
        covered = kk.size();
    }
    std::reverse(found.begin(), found.end());
    return AbelianStructure{found};
}

AbelianStructure abelianization(const FiniteMatrixGroup& g) {
    std::vector<Index> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
    return quotient_invariant_factors(g, all, commutator_subgroup(g));
}

bool all_abelian_subgroups_cyclic(const FiniteMatrixGroup& g) {
    // An abelian group is cyclic iff it has no C_p x C_p, so it suffices to
    // look at commuting pairs of order p.
    const auto n = static_cast<std::int64_t>(g.order());
    for (auto p : nt::prime_factors(n)) {
        std::vector<Index> ord_p;
        for (std::size_t i = 0; i < g.order(); ++i)
            if (g.element_order(static_cast<Index>(i)) == p) ord_p.push_back(static_cast<Index>(i));
        for (Index a : ord_p) {
            std::vector<char> in_a(g.order(), 0);
            Index x = 0;
            for (std::int64_t j = 0; j < p; ++j) {
                in_a[x] = 1;
                x = g.mul(x, a);
            }
            for (Index b : ord_p)
                if (!in_a[b] && g.commute(a, b)) return false;
        }
    }
    return true;
}

} // namespace lrq
