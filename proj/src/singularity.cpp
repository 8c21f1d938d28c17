#include "lrq/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

using Index = FiniteMatrixGroup::Index;

LrqSingularity make_singularity(LrRepresentation rep) {
    if (rep.dim < 2) raise(ErrorKind::BadDimension, "a quotient singularity needs dimension >= 2");
    auto lam = lambda(rep);
    if (lam != 0) raise(ErrorKind::NotVerySmall, "lambda = " + std::to_string(lam) + ", not very small");
    return LrqSingularity{std::move(rep)};
}

SingularityInvariants invariants(const LrqSingularity& x) {
    const auto& s = x.rep.scheme;
    const auto& g = *s.abs;
    SingularityInvariants inv;
    inv.length = s.length();
    inv.f_signature = Rational(1, inv.length);
    inv.class_group = abelianization(g);
    for (auto d : inv.class_group.factors) {
        ClassGroupFactor f;
        f.order = d;
        f.p_part = nt::p_part(d, s.p);
        f.prime_to_p = d / f.p_part;
        inv.class_group_dual.push_back(f);
    }

    std::vector<Index> kernel = commutator_subgroup(g);
    kernel.insert(kernel.end(), s.sylow.begin(), s.sylow.end());
    kernel = g.subgroup(kernel);
    std::vector<Index> all(g.order());
    std::iota(all.begin(), all.end(), Index{0});
    inv.pi1_etale.order = s.etale_length();
    inv.pi1_etale.abelianization = quotient_invariant_factors(g, all, kernel);
    for (std::size_t k = 0; k < g.generators().size(); ++k)
        if (!std::binary_search(s.sylow.begin(), s.sylow.end(), g.generators()[k]))
            inv.pi1_etale.generators.push_back(x.rep.generator_images[k]);

    inv.gorenstein = predicates(x.rep).gorenstein;
    return inv;
}

namespace {

constexpr std::int64_t kMaxBoxPoints = 20'000'000;

std::int64_t box_points(std::int64_t side, std::size_t d) {
    std::int64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total = nt::checked_mul(total, side);
        if (total > kMaxBoxPoints)
            raise(ErrorKind::BadInput, "box enumeration too large (more than " + std::to_string(kMaxBoxPoints) + " points)");
    }
    return total;
}

bool dominates(const std::vector<std::int64_t>& e, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < b[i]) return false;
    return true;
}

// Visits [0, side)^d in lexicographic order.
template <class F>
void for_each_point(std::int64_t side, std::size_t d, F&& f) {
    box_points(side, d);
    std::vector<std::int64_t> e(d, 0);
    while (true) {
        f(e);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++e[i] < side) break;
            e[i] = 0;
            if (i == 0) return;
        }
        if (d == 0) return;
    }
}

} // namespace

std::vector<std::vector<std::int64_t>> hilbert_basis(const CyclicType& t) {
    validate(t);
    const std::size_t d = t.dimension();
    std::vector<std::vector<std::int64_t>> basis;
    // Lexicographic order visits every e' <= e before e.
    for_each_point(t.n + 1, d, [&](const std::vector<std::int64_t>& e) {
        __int128 s = 0;
        bool zero = true;
        for (std::size_t i = 0; i < d; ++i) {
            s += static_cast<__int128>(t.weights[i]) * e[i];
            zero = zero && e[i] == 0;
        }
        if (zero || s % t.n != 0) return;
        for (const auto& b : basis)
            if (dominates(e, b)) return;
        basis.push_back(e);
    });
    // n * unit_i lies in the monoid, so nothing outside [0, n]^d is minimal.
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::int64_t> u(d, 0);
        u[i] = t.n;
        if (std::none_of(basis.begin(), basis.end(), [&](const auto& b) { return dominates(u, b); }))
            throw std::logic_error("n * unit vector is not generated");
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

Rational hilbert_kunz(const CyclicType& t) {
    auto basis = hilbert_basis(t);
    std::int64_t count = 0;
    for_each_point(t.n, t.dimension(), [&](const std::vector<std::int64_t>& e) {
        for (const auto& b : basis)
            if (dominates(e, b)) return;
        ++count;
    });
    return Rational(count, t.n);
}

CyclicType cyclic_type_of(const LrqSingularity& x) {
    const auto& g = *x.rep.scheme.abs;
    const auto n = static_cast<std::int64_t>(g.order());
    std::optional<Index> gen;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.element_order(static_cast<Index>(i)) == n) {
            gen = static_cast<Index>(i);
            break;
        }
    if (!gen) raise(ErrorKind::NotImplementedForNonAbelian, "Hilbert-Kunz multiplicity needs a cyclic group");
    const CycMatrix& a = x.rep.images[*gen];
    CyclicType t{n, {}};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j && !a.at(i, j).is_zero())
                raise(ErrorKind::NotImplementedForNonAbelian, "Hilbert-Kunz multiplicity needs a diagonal action");
        std::optional<std::int64_t> w;
        for (std::int64_t k = 0; k < n && !w; ++k)
            if (a.at(i, i) == root_of_unity(n, k)) w = k;
        if (!w) raise(ErrorKind::NotImplementedForNonAbelian, "diagonal entry is not an n-th root of unity");
        t.weights.push_back(*w);
    }
    return t;
}

Rational hilbert_kunz(const LrqSingularity& x) { return hilbert_kunz(cyclic_type_of(x)); }

std::vector<std::int64_t> hj_fraction(std::int64_t n, std::int64_t q) {
    if (!(q > 0 && q < n) || std::gcd(n, q) != 1)
        raise(ErrorKind::BadInput, "need 0 < q < n with gcd(n, q) = 1, got n=" + std::to_string(n) +
                                       ", q=" + std::to_string(q));
    std::vector<std::int64_t> a;
    while (q != 0) {
        std::int64_t c = (n + q - 1) / q;
        a.push_back(c);
        std::int64_t next = nt::checked_mul(c, q) - n;
        n = q;
        q = next;
    }
    return a;
}

std::vector<std::int64_t> continuants(const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> out{1};
    std::int64_t prev = 0, cur = 1;
    for (auto ai : a) {
        std::int64_t next = nt::checked_add(nt::checked_mul(ai, cur), -prev);
        prev = cur;
        cur = next;
        out.push_back(cur);
    }
    return out;
}

DualGraph chain_graph(const std::vector<std::int64_t>& a) {
    DualGraph g;
    for (auto ai : a) g.self_intersection.push_back(-ai);
    for (std::size_t i = 1; i < a.size(); ++i) g.edges.emplace_back(i - 1, i);
    return g;
}

DualGraph resolution_chain(std::int64_t n, std::int64_t q) { return chain_graph(hj_fraction(n, q)); }

DualGraph ade_graph(const AdeType& t) {
    if (!valid_ade(t.kind, t.n)) raise(ErrorKind::BadInput, "not an ADE type: " + t.str());
    const auto n = static_cast<std::size_t>(t.n);
    DualGraph g;
    g.self_intersection.assign(n, -2);
    switch (t.kind) {
    case 'A':
        for (std::size_t i = 1; i < n; ++i) g.edges.emplace_back(i - 1, i);
        break;
    case 'D':
        for (std::size_t i = 1; i + 1 < n; ++i) g.edges.emplace_back(i - 1, i);
        g.edges.emplace_back(n - 3, n - 1);
        break;
    default:
        for (std::size_t i = 1; i + 1 < n; ++i) g.edges.emplace_back(i - 1, i);
        g.edges.emplace_back(2, n - 1);
        break;
    }
    return g;
}

ShapeInfo classify_shape(const DualGraph& g) {
    const std::size_t v = g.self_intersection.size();
    ShapeInfo info;
    if (v == 0) {
        info.shape = GraphShape::Chain;
        return info;
    }
    std::vector<std::vector<std::size_t>> adj(v);
    for (auto [a, b] : g.edges) {
        if (a >= v || b >= v || a == b) return info;
        if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) return info;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (g.edges.size() != v - 1) return info;
    std::vector<char> seen(v, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != v) return info;

    std::size_t deg3 = 0, center = 0;
    for (std::size_t i = 0; i < v; ++i) {
        if (adj[i].size() > 3) return info;
        if (adj[i].size() == 3) {
            ++deg3;
            center = i;
        }
    }
    if (deg3 == 0) {
        info.shape = GraphShape::Chain;
        return info;
    }
    if (deg3 > 1) return info;
    info.shape = GraphShape::Star;
    for (auto start : adj[center]) {
        std::vector<std::int64_t> a;
        std::size_t prev = center, cur = start;
        while (true) {
            a.push_back(-g.self_intersection[cur]);
            std::size_t next = v;
            for (auto y : adj[cur])
                if (y != prev) next = y;
            if (next == v) break;
            prev = cur;
            cur = next;
        }
        info.branches.push_back(continuants(a).back());
    }
    std::sort(info.branches.begin(), info.branches.end());
    return info;
}

FRegularity is_f_regular_graph(const DualGraph& g, std::int64_t p) {
    for (auto s : g.self_intersection)
        if (s > -2) return {false, "self-intersection above -2: not a minimal resolution graph"};
    auto info = classify_shape(g);
    if (info.shape == GraphShape::Chain) return {true, "chain"};
    if (info.shape == GraphShape::Other) return {false, "neither a chain nor a star with three branches"};
    const auto& b = info.branches;
    std::string type = "star (" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + ")";
    auto excluded = [&](std::initializer_list<std::int64_t> primes) {
        return std::find(primes.begin(), primes.end(), p) != primes.end();
    };
    if (b[0] == 2 && b[1] == 2) {
        if (excluded({2})) return {false, type + " requires p != 2"};
        return {true, type};
    }
    if (b[0] == 2 && b[1] == 3 && (b[2] == 3 || b[2] == 4)) {
        if (excluded({2, 3})) return {false, type + " requires p != 2, 3"};
        return {true, type};
    }
    if (b[0] == 2 && b[1] == 3 && b[2] == 5) {
        if (excluded({2, 3, 5})) return {false, type + " requires p != 2, 3, 5"};
        return {true, type};
    }
    return {false, type + " is not of type (2,2,d), (2,3,3), (2,3,4) or (2,3,5)"};
}

std::optional<RdpRealization> rdp_group_for(const AdeType& t, std::int64_t p) {
    if (!valid_ade(t.kind, t.n)) raise(ErrorKind::BadInput, "not an ADE type: " + t.str());
    auto divides = [&](std::int64_t n) { return p != 0 && n % p == 0; };
    RdpRealization r;
    r.length = ade_length(t);
    switch (t.kind) {
    case 'A':
        r.family = Family::Mu;
        r.params = {{"n", t.n + 1}};
        r.group = "mu_" + std::to_string(t.n + 1);
        r.etale = !divides(t.n + 1);
        return r;
    case 'D':
        if (p == 2) return std::nullopt;
        r.family = Family::BD;
        r.params = {{"n", t.n - 2}};
        r.group = "BD_" + std::to_string(t.n - 2);
        r.etale = !divides(t.n - 2);
        return r;
    default:
        if (p == 2 || p == 3 || (t.n == 8 && p == 5)) return std::nullopt;
        r.family = t.n == 6 ? Family::BT : t.n == 7 ? Family::BO : Family::BI;
        r.group = std::string(family_name(r.family)) + "_" + std::to_string(r.length);
        r.etale = true;
        return r;
    }
}

} // namespace lrq
