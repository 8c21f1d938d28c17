#include "lrq/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lrq::oracle {

namespace {

bool contains(const std::vector<CycMatrix>& set, const CycMatrix& a) {
    return std::any_of(set.begin(), set.end(), [&](const CycMatrix& b) { return a == b; });
}

// Closure of a finite set of matrices under multiplication.
std::vector<CycMatrix> generate(std::vector<CycMatrix> gens, std::size_t dim, std::int64_t conductor) {
    std::vector<CycMatrix> out{CycMatrix::identity(dim, conductor)};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            CycMatrix x = out[i] * g;
            if (!contains(out, x)) out.push_back(x);
        }
    return out;
}

CycMatrix matrix_inverse(const CycMatrix& a, std::int64_t order) {
    CycMatrix r = CycMatrix::identity(a.rows(), a.conductor());
    for (std::int64_t k = 1; k < order; ++k) r = r * a;
    return r;
}

} // namespace

std::int64_t matrix_order(const CycMatrix& a, std::int64_t limit) {
    CycMatrix x = a;
    for (std::int64_t k = 1; k <= limit; ++k) {
        if (x.is_identity()) return k;
        x = x * a;
    }
    return 0;
}

std::vector<CycMatrix> commutator_subgroup(const std::vector<CycMatrix>& elements) {
    if (elements.empty()) throw std::invalid_argument("empty group");
    const auto n = static_cast<std::int64_t>(elements.size());
    std::vector<CycMatrix> inv;
    for (const auto& a : elements) inv.push_back(matrix_inverse(a, matrix_order(a, n)));
    std::vector<CycMatrix> comms;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j) {
            CycMatrix c = elements[i] * elements[j] * inv[i] * inv[j];
            if (!c.is_identity() && !contains(comms, c)) comms.push_back(c);
        }
    return generate(comms, elements[0].rows(), elements[0].conductor());
}

AbelianizationStats abelianization_stats(const std::vector<CycMatrix>& elements) {
    auto k = commutator_subgroup(elements);
    AbelianizationStats s;
    s.order = static_cast<std::int64_t>(elements.size() / k.size());
    for (const auto& a : elements) {
        CycMatrix x = a;
        std::int64_t e = 1;
        while (!contains(k, x)) {
            x = x * a;
            ++e;
        }
        s.exponent = std::lcm(s.exponent, e);
    }
    return s;
}

bool literal_is_cyclic(const std::vector<CycMatrix>& elements) {
    const auto n = static_cast<std::int64_t>(elements.size());
    return std::any_of(elements.begin(), elements.end(),
                       [&](const CycMatrix& a) { return matrix_order(a, n) == n; });
}

bool literal_abelian_subgroups_cyclic(const std::vector<CycMatrix>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            const auto& a = elements[i];
            const auto& b = elements[j];
            if (!(a * b == b * a)) continue;
            auto sub = generate({a, b}, a.rows(), a.conductor());
            if (!literal_is_cyclic(sub)) return false;
        }
    return true;
}

Rational hj_evaluate(const std::vector<std::int64_t>& a) {
    if (a.empty()) throw std::invalid_argument("empty continued fraction");
    Rational x(a.back());
    for (std::size_t i = a.size() - 1; i-- > 0;) x = Rational(a[i]) - Rational(1) / x;
    return x;
}

namespace {

struct Box {
    std::int64_t side;
    std::size_t d;
    std::size_t size;

    std::vector<std::int64_t> point(std::size_t idx) const {
        std::vector<std::int64_t> e(d);
        for (std::size_t i = d; i-- > 0;) {
            e[i] = static_cast<std::int64_t>(idx % side);
            idx /= side;
        }
        return e;
    }
};

// cnt[e] = number of nonzero monoid points f <= e, by inclusion-exclusion.
std::vector<std::int64_t> monoid_counts(std::int64_t n, const std::vector<std::int64_t>& q, const Box& box) {
    const std::size_t d = q.size();
    std::vector<std::size_t> stride(d, 1);
    for (std::size_t i = d - 1; i-- > 0;) stride[i] = stride[i + 1] * box.side;
    std::vector<std::int64_t> cnt(box.size, 0);
    for (std::size_t idx = 0; idx < box.size; ++idx) {
        auto e = box.point(idx);
        std::int64_t s = 0;
        bool zero = true;
        for (std::size_t i = 0; i < d; ++i) {
            s += q[i] * e[i];
            zero = zero && e[i] == 0;
        }
        std::int64_t c = (!zero && s % n == 0) ? 1 : 0;
        for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
            bool ok = true;
            std::size_t j = idx;
            for (std::size_t i = 0; i < d; ++i)
                if (mask >> i & 1) {
                    if (e[i] == 0) ok = false;
                    j -= stride[i];
                }
            if (!ok) continue;
            c += (std::popcount(mask) % 2 == 1) ? cnt[j] : -cnt[j];
        }
        cnt[idx] = c;
    }
    return cnt;
}

Box make_box(std::int64_t side, std::size_t d) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < d; ++i) size *= static_cast<std::size_t>(side);
    return {side, d, size};
}

} // namespace

std::vector<std::vector<std::int64_t>> hilbert_basis_dp(std::int64_t n, const std::vector<std::int64_t>& q) {
    Box box = make_box(n + 1, q.size());
    auto cnt = monoid_counts(n, q, box);
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t idx = 0; idx < box.size; ++idx) {
        if (cnt[idx] != 1) continue;
        auto e = box.point(idx);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * e[i];
        bool zero = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
        if (!zero && s % n == 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Rational hilbert_kunz_dp(std::int64_t n, const std::vector<std::int64_t>& q) {
    Box big = make_box(n + 1, q.size());
    auto cnt = monoid_counts(n, q, big);
    std::int64_t count = 0;
    for (std::size_t idx = 0; idx < big.size; ++idx) {
        auto e = big.point(idx);
        if (std::any_of(e.begin(), e.end(), [&](std::int64_t x) { return x == n; })) continue;
        if (cnt[idx] == 0) ++count;
    }
    return Rational(count, n);
}

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t dot(const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Vec> roots_of(const AdeType& t) {
    std::vector<Vec> roots;
    if (t.kind == 'A') {
        const int dim = t.n + 1;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j) {
                    Vec v(dim, 0);
                    v[i] = 1;
                    v[j] = -1;
                    roots.push_back(v);
                }
    } else if (t.kind == 'D') {
        for (int i = 0; i < t.n; ++i)
            for (int j = i + 1; j < t.n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        Vec v(t.n, 0);
                        v[i] = si;
                        v[j] = sj;
                        roots.push_back(v);
                    }
    } else {
        throw std::invalid_argument("brute force covers A and D only");
    }
    return roots;
}

int integer_rank(std::vector<Vec> rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            std::int64_t a = rows[rank][c], b = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = a * rows[r][k] - b * rows[rank][k];
            std::int64_t g = 0;
            for (auto x : rows[r]) g = std::gcd(g, x);
            if (g > 1)
                for (auto& x : rows[r]) x /= g;
        }
        ++rank;
    }
    return rank;
}

AdeType type_of_component(int rank, std::size_t roots) {
    if (roots == static_cast<std::size_t>(rank * (rank + 1))) return {'A', rank};
    if (rank >= 4 && roots == static_cast<std::size_t>(2 * rank * (rank - 1))) return {'D', rank};
    if (rank == 6 && roots == 72) return {'E', 6};
    if (rank == 7 && roots == 126) return {'E', 7};
    if (rank == 8 && roots == 240) return {'E', 8};
    throw std::logic_error("unrecognized root system");
}

} // namespace

std::set<RootDiagram> brute_root_subsystems(const AdeType& t) {
    auto roots = roots_of(t);
    if (roots.size() > 64) throw std::invalid_argument("too many roots for bitmask enumeration");
    const std::size_t nr = roots.size();
    std::map<Vec, std::size_t> index;
    for (std::size_t i = 0; i < nr; ++i) index[roots[i]] = i;

    auto closure = [&](std::uint64_t s) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t b = 0; b < nr; ++b) {
                if (!(s >> b & 1)) continue;
                for (std::size_t g = 0; g < nr; ++g) {
                    if (!(s >> g & 1)) continue;
                    std::int64_t c = dot(roots[g], roots[b]);
                    if (c == 0) continue;
                    Vec r = roots[g];
                    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * roots[b][k];
                    auto bit = std::uint64_t{1} << index.at(r);
                    if (!(s & bit)) {
                        s |= bit;
                        grew = true;
                    }
                }
            }
        }
        return s;
    };

    std::set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (std::size_t r = 0; r < nr; ++r) {
            if (queue[qi] >> r & 1) continue;
            auto s = closure(queue[qi] | (std::uint64_t{1} << r));
            if (seen.insert(s).second) queue.push_back(s);
        }

    std::set<RootDiagram> out;
    for (auto s : seen) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < nr; ++i)
            if (s >> i & 1) members.push_back(i);
        std::vector<int> comp(members.size(), -1);
        std::vector<AdeType> types;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (comp[i] >= 0) continue;
            const int id = static_cast<int>(types.size());
            std::vector<std::size_t> stack{i};
            comp[i] = id;
            std::vector<Vec> vecs;
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                vecs.push_back(roots[members[x]]);
                for (std::size_t y = 0; y < members.size(); ++y)
                    if (comp[y] < 0 && dot(roots[members[x]], roots[members[y]]) != 0) {
                        comp[y] = id;
                        stack.push_back(y);
                    }
            }
            types.push_back(type_of_component(integer_rank(vecs), vecs.size()));
        }
        out.insert(RootDiagram(types));
    }
    return out;
}

} // namespace lrq::oracle
