#include "lrq/deform.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lrq/classify.hpp"
#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

void validate(const ThreefoldType& t) {
    if (const auto* c = std::get_if<CyclicThreefold>(&t)) {
        if (c->n < 1) raise(ErrorKind::InvalidParameters, "need n >= 1");
        for (auto q : {c->q1, c->q2})
            if (std::gcd(nt::mod(q, c->n), c->n) != 1)
                raise(ErrorKind::InvalidParameters, "weight " + std::to_string(q) + " is not a unit mod " +
                                                        std::to_string(c->n));
        return;
    }
    const auto& m = std::get<MetacyclicThreefold>(t);
    family_length(Family::Metacyclic3, {{"m", m.m}, {"f", m.f}, {"N", m.N}, {"r", m.r}});
}

ThreefoldType threefold_from_cyclic(const CyclicType& t) {
    validate(t);
    if (t.dimension() != 3) raise(ErrorKind::BadDimension, "a threefold type needs three weights");
    auto inv = nt::mod_inverse(t.weights[0], t.n).value_or(0);
    CyclicThreefold c{t.n, nt::mod(inv * t.weights[1], t.n), nt::mod(inv * t.weights[2], t.n)};
    if (t.n == 1) c.q1 = c.q2 = 1;
    return c;
}

std::string str(const ThreefoldType& t) {
    if (const auto* c = std::get_if<CyclicThreefold>(&t))
        return "1/" + std::to_string(c->n) + "(1," + std::to_string(c->q1) + "," + std::to_string(c->q2) + ")";
    const auto& m = std::get<MetacyclicThreefold>(t);
    return "1/" + std::to_string(m.m) + "(1," + std::to_string(m.r) + "," + std::to_string(m.r * m.r) +
           ") x| mu_{3^" + std::to_string(m.f) + "*" + std::to_string(m.N) + "}";
}

std::vector<std::int64_t> primitive_cube_roots(std::int64_t p) {
    std::vector<std::int64_t> out;
    if (p < 2 || !nt::is_prime(p)) return out;
    for (std::int64_t z = 2; z < p; ++z)
        if (nt::multiplicative_order(z, p) == 3) out.push_back(z);
    return out;
}

namespace {

std::int64_t connected_modulus(const ThreefoldType& t) {
    if (const auto* c = std::get_if<CyclicThreefold>(&t)) return c->n;
    return std::get<MetacyclicThreefold>(t).m;
}

} // namespace

bool is_rigid(const ThreefoldType& t, std::int64_t p, std::optional<std::int64_t> cube_root) {
    validate(t);
    if (p != 0 && !nt::is_prime(p))
        raise(ErrorKind::InvalidParameters, "characteristic must be 0 or a prime, got " + std::to_string(p));
    if (p == 0 || p == 2) return true;
    if (const auto* c = std::get_if<CyclicThreefold>(&t))
        return !(c->n % p == 0 && (1 + c->q1 + c->q2) % c->n == 0);

    const auto& m = std::get<MetacyclicThreefold>(t);
    // chi_det is a^3 on mu_N and chi_ad is trivial there, so N = 1 is forced;
    // chi_ad(C) = r mod p has order 3 while chi_det(C) has order 3^(f-1).
    if (m.m % p != 0 || m.f != 2 || m.N != 1) return true;
    const auto rbar = nt::mod(m.r, p);
    if (nt::multiplicative_order(rbar, p) != 3) return true;
    if (!cube_root)
        raise(ErrorKind::MissingIdentification,
              "r mod " + std::to_string(p) + " = " + std::to_string(rbar) +
                  " is a primitive cube root; pass the root of F_p that zeta_3 reduces to");
    if (nt::multiplicative_order(nt::mod(*cube_root, p), p) != 3)
        raise(ErrorKind::InvalidParameters,
              std::to_string(*cube_root) + " is not a primitive cube root of unity mod " + std::to_string(p));
    return rbar != nt::mod(*cube_root, p);
}

std::string DeformationSpace::str() const {
    if (rigid) return "rigid";
    std::int64_t pa = 1;
    for (int i = 0; i < exponent; ++i) pa = nt::checked_mul(pa, p);
    return "W(k)[eps]/(eps^2, " + std::to_string(pa) + "*eps)";
}

DeformationSpace deformation_space(const ThreefoldType& t, std::int64_t p, std::optional<std::int64_t> cube_root) {
    DeformationSpace d;
    d.p = p;
    if (is_rigid(t, p, cube_root)) return d;
    d.rigid = false;
    d.exponent = nt::valuation(connected_modulus(t), p);
    if (d.exponent < 1) throw std::logic_error("non-rigid type with trivial connected part");
    return d;
}

bool rigidity_dim_ge_4(int d) {
    if (d < 4) raise(ErrorKind::BadDimension, "dimension " + std::to_string(d) + " < 4; use the threefold criterion");
    return true;
}

// ---------------------------------------------------------------------------
// Root diagrams

namespace {

void normalize_into(std::vector<AdeType>& out, AdeType t) {
    if (t.kind == 'D' && t.n == 2) {
        out.push_back({'A', 1});
        out.push_back({'A', 1});
    } else if (t.kind == 'D' && t.n == 3) {
        out.push_back({'A', 3});
    } else if (t.n > 0) {
        out.push_back(t);
    }
}

} // namespace

RootDiagram::RootDiagram(std::vector<AdeType> components) {
    for (auto t : components) normalize_into(comps_, t);
    for (const auto& t : comps_)
        if (!valid_ade(t.kind, t.n)) raise(ErrorKind::BadInput, "not an ADE type: " + t.str());
    std::sort(comps_.begin(), comps_.end());
}

int RootDiagram::rank() const {
    int r = 0;
    for (const auto& t : comps_) r += t.rank();
    return r;
}

RootDiagram RootDiagram::operator+(const RootDiagram& o) const {
    auto all = comps_;
    all.insert(all.end(), o.comps_.begin(), o.comps_.end());
    return RootDiagram(std::move(all));
}

std::string RootDiagram::str() const {
    std::string s;
    for (std::size_t i = 0; i < comps_.size();) {
        std::size_t j = i;
        while (j < comps_.size() && comps_[j] == comps_[i]) ++j;
        if (!s.empty()) s += "+";
        if (j - i > 1) s += std::to_string(j - i);
        s += comps_[i].str();
        i = j;
    }
    return s;
}

RootDiagram parse_root_diagram(const std::string& text) {
    std::vector<AdeType> comps;
    if (text.empty() || text == "0") return RootDiagram{};
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '+')) {
        std::size_t k = 0;
        while (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) ++k;
        int mult = k == 0 ? 1 : std::stoi(part.substr(0, k));
        if (mult < 1 || mult > 64) raise(ErrorKind::BadInput, "bad multiplicity in '" + part + "'");
        auto t = parse_ade(std::string_view(part).substr(k));
        for (int i = 0; i < mult; ++i) comps.push_back(t);
    }
    return RootDiagram(std::move(comps));
}

namespace {

using Graph = std::vector<std::vector<int>>;

void add_edge(Graph& g, int a, int b) {
    g[a].push_back(b);
    g[b].push_back(a);
}

Graph path(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) add_edge(g, i - 1, i);
    return g;
}

// Star with the given arm lengths around vertex 0.
Graph star(std::initializer_list<int> arms) {
    int total = 1;
    for (int a : arms) total += a;
    Graph g(total);
    int next = 1;
    for (int a : arms) {
        int prev = 0;
        for (int i = 0; i < a; ++i, ++next) {
            add_edge(g, prev, next);
            prev = next;
        }
    }
    return g;
}

Graph dynkin(const AdeType& t) {
    switch (t.kind) {
    case 'A': return path(t.n);
    case 'D': return star({1, 1, t.n - 3});
    default: return star({1, 2, t.n - 4});
    }
}

// Extended diagram of a type other than A (the cycle is handled directly).
Graph extended(const AdeType& t) {
    if (t.kind == 'D') {
        Graph g = path(t.n - 1);
        g.resize(t.n + 1);
        add_edge(g, t.n - 1, 1);
        add_edge(g, t.n, t.n - 3);
        return g;
    }
    if (t.n == 6) return star({2, 2, 2});
    if (t.n == 7) return star({3, 3, 1});
    return star({5, 2, 1});
}

// Identifies a connected simply-laced tree.
AdeType identify(const Graph& g, const std::vector<int>& verts) {
    const int n = static_cast<int>(verts.size());
    std::vector<char> in(g.size(), 0);
    for (int v : verts) in[v] = 1;
    auto degree = [&](int v) {
        int d = 0;
        for (int w : g[v]) d += in[w];
        return d;
    };
    int center = -1;
    for (int v : verts) {
        int d = degree(v);
        if (d > 3 || (d == 3 && center >= 0)) throw std::logic_error("not a Dynkin diagram");
        if (d == 3) center = v;
    }
    if (center < 0) return {'A', n};
    std::vector<int> arms;
    for (int start : g[center]) {
        if (!in[start]) continue;
        int len = 0, prev = center, cur = start;
        while (true) {
            ++len;
            int next = -1;
            for (int w : g[cur])
                if (in[w] && w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {'E', n};
    throw std::logic_error("not a Dynkin diagram");
}

RootDiagram delete_vertex(const Graph& g, int removed) {
    std::vector<char> seen(g.size(), 0);
    seen[removed] = 1;
    std::vector<AdeType> comps;
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
        if (seen[s]) continue;
        std::vector<int> verts{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    verts.push_back(w);
                    stack.push_back(w);
                }
        }
        comps.push_back(identify(g, verts));
    }
    return RootDiagram(std::move(comps));
}

std::set<RootDiagram> moves(const AdeType& t) {
    std::set<RootDiagram> out;
    Graph g = dynkin(t);
    for (int v = 0; v < t.n; ++v) out.insert(delete_vertex(g, v));
    // Deleting a vertex of the cycle A~n gives A_n back.
    if (t.kind != 'A') {
        Graph e = extended(t);
        for (int v = 0; v < static_cast<int>(e.size()); ++v) out.insert(delete_vertex(e, v));
    }
    out.erase(RootDiagram::single(t));
    return out;
}

std::set<RootDiagram> combine(const std::set<RootDiagram>& a, const std::set<RootDiagram>& b) {
    std::set<RootDiagram> out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(x + y);
    return out;
}

std::set<RootDiagram> specializations_single(const AdeType& t);

std::set<RootDiagram> specializations_multi(const RootDiagram& d) {
    std::set<RootDiagram> acc{RootDiagram{}};
    for (const auto& c : d.components()) acc = combine(acc, specializations_single(c));
    return acc;
}

std::mutex memo_mutex;
std::map<AdeType, std::set<RootDiagram>> memo;

std::set<RootDiagram> specializations_single(const AdeType& t) {
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(t); it != memo.end()) return it->second;
    }
    // Every move strictly shrinks the root system, so the recursion is finite.
    std::set<RootDiagram> out{RootDiagram::single(t), RootDiagram{}};
    for (const auto& d : moves(t)) {
        auto sub = specializations_multi(d);
        out.insert(sub.begin(), sub.end());
    }
    std::lock_guard lock(memo_mutex);
    memo.emplace(t, out);
    return out;
}

} // namespace

std::set<RootDiagram> rdp_specializations(const RootDiagram& g0) {
    auto out = specializations_multi(g0);
    out.insert(RootDiagram{});
    return out;
}

LengthReport length_monotonic_check(const AdeType& g0) {
    if (!valid_ade(g0.kind, g0.n)) raise(ErrorKind::BadInput, "not an ADE type: " + g0.str());
    LengthReport r;
    r.length0 = ade_length(g0);
    for (const auto& d : rdp_specializations(RootDiagram::single(g0)))
        for (const auto& c : d.components()) {
            ++r.checked;
            if (ade_length(c) > r.length0)
                r.violations.push_back(c.str() + " in " + d.str() + " has length " + std::to_string(ade_length(c)));
        }
    return r;
}

namespace {

void check_sequence(const std::vector<std::int64_t>& a, const char* name) {
    if (a.empty()) raise(ErrorKind::BadSequence, std::string(name) + " is empty");
    for (auto x : a)
        if (x < 2) raise(ErrorKind::BadSequence, std::string(name) + " has an entry below 2");
}

std::vector<std::int64_t> continuant_chain(const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> out{1};
    std::int64_t prev = 0, cur = 1;
    for (auto x : a) {
        std::int64_t next = nt::checked_add(nt::checked_mul(x, cur), -prev);
        prev = cur;
        cur = next;
        out.push_back(cur);
    }
    return out;
}

} // namespace

Dominance cyclic_deformation_dominance(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& a_prime) {
    check_sequence(a, "a");
    check_sequence(a_prime, "a'");
    auto c = continuant_chain(a);
    auto cp = continuant_chain(a_prime);
    Dominance d;
    d.n = c.back();
    d.n_prime = cp.back();
    d.dominates = a_prime.size() <= a.size();
    for (std::size_t i = 0; d.dominates && i < a_prime.size(); ++i) d.dominates = a_prime[i] <= a[i];
    if (d.dominates) {
        const auto k = c.size() - 1, kp = cp.size() - 1;
        if (d.n_prime > d.n || cp[kp] - cp[kp - 1] > c[k] - c[k - 1])
            throw std::logic_error("dominated continued fraction with larger continuant");
    }
    return d;
}

} // namespace lrq
