#include "lrq/classify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lrq/cyclic_type.hpp"
#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 13> kFamilyNames{{
    {Family::Mu, "Mu"},
    {Family::MuNQ, "MuNQ"},
    {Family::BD, "BD"},
    {Family::BT, "BT"},
    {Family::BO, "BO"},
    {Family::BI, "BI"},
    {Family::Brieskorn2a, "Brieskorn2a"},
    {Family::Brieskorn2b, "Brieskorn2b"},
    {Family::Brieskorn3a, "Brieskorn3a"},
    {Family::Brieskorn3b, "Brieskorn3b"},
    {Family::Brieskorn4, "Brieskorn4"},
    {Family::Brieskorn5, "Brieskorn5"},
    {Family::Metacyclic3, "Metacyclic3"},
}};

[[noreturn]] void invalid(const std::string& msg) { raise(ErrorKind::InvalidParameters, msg); }

CycNum z(std::int64_t m, std::int64_t k = 1) { return root_of_unity(m, k); }

CycMatrix mat2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
    return CycMatrix::from_rows({{a, b}, {c, d}});
}

CycMatrix sl2_mu(std::int64_t n) { return CycMatrix::diagonal({z(n), z(n, -1)}); }

std::vector<CycMatrix> bd_gens(std::int64_t n) {
    return {sl2_mu(2 * n), mat2(CycNum(0), z(4), z(4), CycNum(0))};
}

std::vector<CycMatrix> bt_gens() {
    auto g = bd_gens(2);
    CycNum inv_sqrt2 = (z(8) + z(8, 7)) * CycNum(Rational(1, 2));
    g.push_back(inv_sqrt2 * mat2(z(8, 7), z(8, 7), z(8, 5), z(8)));
    return g;
}

std::vector<CycMatrix> bo_gens() {
    auto g = bt_gens();
    g.push_back(sl2_mu(8));
    return g;
}

std::vector<CycMatrix> bi_gens() {
    CycNum c = z(5) + z(5, 4);
    CycNum s = (z(5, 2) - z(5, 3)).inverse();
    return {sl2_mu(10), mat2(CycNum(0), CycNum(1), CycNum(-1), CycNum(0)),
            s * mat2(c, CycNum(1), CycNum(1), -c)};
}

CycMatrix scalar(const CycNum& x, std::size_t d) {
    return CycMatrix::diagonal(std::vector<CycNum>(d, x));
}

// Generators of a small subgroup given as an index set, chosen greedily.
std::vector<FiniteMatrixGroup::Index> greedy_generators(const FiniteMatrixGroup& g,
                                                        const std::vector<FiniteMatrixGroup::Index>& sub) {
    std::vector<FiniteMatrixGroup::Index> gens;
    std::vector<FiniteMatrixGroup::Index> span{0};
    for (auto x : sub) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = g.subgroup(gens);
        if (span.size() == sub.size()) break;
    }
    return gens;
}

// (mu_h1, mu_n1; H2, N2) with H1/N1 and H2/N2 cyclic of the same order:
// generators are the scalar zeta_n1, generators of N2, and zeta_h1 * t for t
// generating H2/N2.
std::vector<CycMatrix> fibered(std::int64_t h1, std::int64_t n1, const FiniteMatrixGroup& h2,
                               const std::vector<FiniteMatrixGroup::Index>& n2, FiniteMatrixGroup::Index t) {
    std::vector<CycMatrix> out{scalar(z(n1), 2)};
    for (auto x : greedy_generators(h2, n2)) out.push_back(h2.element(x));
    out.push_back(z(h1) * h2.element(t));
    return out;
}

std::vector<CycMatrix> brieskorn_trivial_quotient(std::int64_t m, std::vector<CycMatrix> h2) {
    if (m == 1) return h2;
    h2.insert(h2.begin(), scalar(z(2 * m), 2));
    return h2;
}

std::vector<CycMatrix> brieskorn_2b(std::int64_t m, std::int64_t n) {
    FiniteMatrixGroup h2 = close(bd_gens(n));
    // N2 = mu_{2n,2n-1}: the cyclic subgroup of order 2n.
    std::optional<FiniteMatrixGroup::Index> c;
    for (std::size_t i = 0; i < h2.order(); ++i)
        if (h2.element_order(static_cast<FiniteMatrixGroup::Index>(i)) == 2 * n) {
            c = static_cast<FiniteMatrixGroup::Index>(i);
            break;
        }
    if (!c) throw std::logic_error("BD_n has no element of order 2n");
    auto n2 = h2.subgroup({*c});
    FiniteMatrixGroup::Index t = 0;
    for (std::size_t i = 0; i < h2.order(); ++i)
        if (!std::binary_search(n2.begin(), n2.end(), static_cast<FiniteMatrixGroup::Index>(i))) {
            t = static_cast<FiniteMatrixGroup::Index>(i);
            break;
        }
    return fibered(4 * m, 2 * m, h2, n2, t);
}

std::vector<CycMatrix> brieskorn_3b(std::int64_t m) {
    FiniteMatrixGroup h2 = close(bt_gens());
    // N2 = BD_2: the elements of 2-power order.
    auto n2 = p_elements(h2, 2);
    FiniteMatrixGroup::Index t = 0;
    for (std::size_t i = 0; i < h2.order(); ++i)
        if (h2.element_order(static_cast<FiniteMatrixGroup::Index>(i)) == 3) {
            t = static_cast<FiniteMatrixGroup::Index>(i);
            break;
        }
    return fibered(6 * m, 2 * m, h2, n2, t);
}

std::int64_t pow3(std::int64_t f) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < f; ++i) r = nt::checked_mul(r, 3);
    return r;
}

void require(bool ok, const std::string& msg) {
    if (!ok) invalid(msg);
}

std::int64_t pos(const Params& ps, std::string_view key) {
    auto v = param(ps, key);
    require(v >= 1, std::string(key) + " must be positive");
    return v;
}

void check_family(Family f, const Params& ps) {
    switch (f) {
    case Family::Mu: {
        auto n = pos(ps, "n");
        for (auto key : {"q1", "q2"})
            if (auto q = find_param(ps, key)) require(std::gcd(nt::mod(*q, n), n) == 1, "weights must be units mod n");
        require(find_param(ps, "q1").has_value() == find_param(ps, "q2").has_value(), "give both q1 and q2 or neither");
        break;
    }
    case Family::MuNQ: {
        auto n = pos(ps, "n");
        auto q = param(ps, "q");
        require(n == 1 || (q >= 1 && q < n && std::gcd(q, n) == 1), "need 1 <= q < n with gcd(n, q) = 1");
        break;
    }
    case Family::BD: require(pos(ps, "n") >= 2, "BD_n needs n >= 2"); break;
    case Family::BT:
    case Family::BO:
    case Family::BI: break;
    case Family::Brieskorn2a: {
        auto m = pos(ps, "m"), n = pos(ps, "n");
        require(n >= 2 && m % 2 == 1 && std::gcd(m, n) == 1, "2a needs n >= 2, m odd, gcd(m, n) = 1");
        break;
    }
    case Family::Brieskorn2b: {
        auto m = pos(ps, "m"), n = pos(ps, "n");
        require(n >= 2 && m % 2 == 0 && std::gcd(m, n) == 1, "2b needs n >= 2, m even, gcd(m, n) = 1");
        break;
    }
    case Family::Brieskorn3a:
    case Family::Brieskorn4: require(std::gcd(pos(ps, "m"), std::int64_t{6}) == 1, "needs gcd(m, 6) = 1"); break;
    case Family::Brieskorn3b: require(std::gcd(pos(ps, "m"), std::int64_t{6}) == 3, "needs gcd(m, 6) = 3"); break;
    case Family::Brieskorn5: require(std::gcd(pos(ps, "m"), std::int64_t{30}) == 1, "needs gcd(m, 30) = 1"); break;
    case Family::Metacyclic3: {
        auto m = pos(ps, "m"), f = pos(ps, "f"), big_n = pos(ps, "N"), r = pos(ps, "r");
        require(f >= 2, "needs f >= 2");
        require(big_n % 3 != 0, "needs 3 not dividing N");
        MetacyclicParams mp{m, nt::checked_mul(pow3(f), big_n), r};
        require(mp.valid() && mp.e() == 3, "needs a valid split metacyclic tuple with ord(r) = 3");
        require(mp.very_small(), "tuple is not very small");
        break;
    }
    }
}

} // namespace

std::string_view family_name(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "Unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames)
        if (n == name) return fam;
    return std::nullopt;
}

std::optional<std::int64_t> find_param(const Params& ps, std::string_view key) {
    for (const auto& [k, v] : ps)
        if (k == key) return v;
    return std::nullopt;
}

std::int64_t param(const Params& ps, std::string_view key) {
    auto v = find_param(ps, key);
    if (!v) invalid("missing parameter '" + std::string(key) + "'");
    return *v;
}

std::int64_t MetacyclicParams::e() const { return m == 1 ? 1 : nt::multiplicative_order(r, m); }

bool MetacyclicParams::valid(std::int64_t p) const {
    if (m < 1 || n < 1 || r < 1 || r > m) return false;
    if (std::gcd(nt::checked_mul(n, r - 1), m) != 1) return false;
    if (nt::mod_pow(r, n, m) != 1 % m) return false;
    if (e() == 0) return false;
    return p == 0 || e() % p != 0;
}

bool MetacyclicParams::very_small() const {
    const std::int64_t ee = e();
    if (ee == 0 || n % ee != 0) return false;
    for (auto q : nt::prime_factors(ee))
        if ((n / ee) % q != 0) return false;
    return true;
}

std::vector<CycMatrix> family_generators(Family f, const Params& ps) {
    check_family(f, ps);
    switch (f) {
    case Family::Mu: {
        auto n = param(ps, "n");
        if (auto q1 = find_param(ps, "q1")) return {CycMatrix::diagonal({z(n), z(n, *q1), z(n, param(ps, "q2"))})};
        return {sl2_mu(n)};
    }
    case Family::MuNQ: {
        auto n = param(ps, "n");
        return {CycMatrix::diagonal({z(n), z(n, n == 1 ? 1 : param(ps, "q"))})};
    }
    case Family::BD: return bd_gens(param(ps, "n"));
    case Family::BT: return bt_gens();
    case Family::BO: return bo_gens();
    case Family::BI: return bi_gens();
    case Family::Brieskorn2a: return brieskorn_trivial_quotient(param(ps, "m"), bd_gens(param(ps, "n")));
    case Family::Brieskorn2b: return brieskorn_2b(param(ps, "m"), param(ps, "n"));
    case Family::Brieskorn3a: return brieskorn_trivial_quotient(param(ps, "m"), bt_gens());
    case Family::Brieskorn3b: return brieskorn_3b(param(ps, "m"));
    case Family::Brieskorn4: return brieskorn_trivial_quotient(param(ps, "m"), bo_gens());
    case Family::Brieskorn5: return brieskorn_trivial_quotient(param(ps, "m"), bi_gens());
    case Family::Metacyclic3: {
        auto m = param(ps, "m"), fexp = param(ps, "f"), big_n = param(ps, "N"), r = param(ps, "r");
        CycMatrix d = CycMatrix::diagonal({z(m), z(m, r), z(m, r * r)});
        CycMatrix s = scalar(z(big_n), 3);
        CycNum zero(0), one(1);
        CycMatrix c = CycMatrix::from_rows({{zero, one, zero}, {zero, zero, one}, {z(pow3(fexp - 1)), zero, zero}});
        return {d, c, s};
    }
    }
    invalid("unknown family");
}

std::int64_t family_length(Family f, const Params& ps) {
    check_family(f, ps);
    switch (f) {
    case Family::Mu:
    case Family::MuNQ: return param(ps, "n");
    case Family::BD: return 4 * param(ps, "n");
    case Family::BT: return 24;
    case Family::BO: return 48;
    case Family::BI: return 120;
    case Family::Brieskorn2a:
    case Family::Brieskorn2b: return 4 * param(ps, "m") * param(ps, "n");
    case Family::Brieskorn3a:
    case Family::Brieskorn3b: return 24 * param(ps, "m");
    case Family::Brieskorn4: return 48 * param(ps, "m");
    case Family::Brieskorn5: return 120 * param(ps, "m");
    case Family::Metacyclic3:
        return nt::checked_mul(nt::checked_mul(param(ps, "m"), pow3(param(ps, "f"))), param(ps, "N"));
    }
    return 0;
}

bool family_gate(Family f, const Params& /*ps*/, std::int64_t p) {
    if (p == 0) return true;
    switch (f) {
    case Family::Mu:
    case Family::MuNQ: return true;
    case Family::BD:
    case Family::Brieskorn2a:
    case Family::Brieskorn2b: return p >= 3;
    case Family::BT:
    case Family::BO:
    case Family::Brieskorn3a:
    case Family::Brieskorn3b:
    case Family::Brieskorn4: return p >= 5;
    case Family::BI:
    case Family::Brieskorn5: return p >= 7;
    case Family::Metacyclic3: return p != 3;
    }
    return false;
}

CatalogEntry make_entry(Family f, const Params& ps, std::int64_t p) {
    CatalogEntry e;
    e.family = f;
    e.params = ps;
    auto gens = family_generators(f, ps);
    e.scheme = make_scheme(p, close(gens));
    e.length = e.scheme.length();
    if (e.length != family_length(f, ps))
        throw std::logic_error(std::string(family_name(f)) + ": closure order " + std::to_string(e.length) +
                               " differs from the expected length " + std::to_string(family_length(f, ps)));
    e.rep = natural_representation(e.scheme);
    auto pr = predicates(e.rep);
    e.lambda = lambda(e.rep);
    e.gorenstein = pr.gorenstein;
    if (!pr.very_small || !pr.faithful)
        throw std::logic_error(std::string(family_name(f)) + " entry is not very small and faithful");
    if (e.length == 1) e.note = "trivial group: smooth point";
    return e;
}

namespace {

struct Candidate {
    std::int64_t length;
    Family family;
    Params params;
};

std::vector<CatalogEntry> build(std::vector<Candidate> cands, std::int64_t p) {
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.family != b.family) return a.family < b.family;
        std::vector<std::int64_t> va, vb;
        for (const auto& kv : a.params) va.push_back(kv.second);
        for (const auto& kv : b.params) vb.push_back(kv.second);
        return va < vb;
    });
    std::vector<CatalogEntry> out;
    out.reserve(cands.size());
    for (const auto& c : cands) out.push_back(make_entry(c.family, c.params, p));
    return out;
}

void push_if(std::vector<Candidate>& v, Family f, Params ps, std::int64_t p, std::int64_t max_length) {
    std::int64_t len = family_length(f, ps);
    if (len <= max_length && family_gate(f, ps, p)) v.push_back({len, f, std::move(ps)});
}

void check_char(std::int64_t p) {
    if (p != 0 && !nt::is_prime(p))
        raise(ErrorKind::InvalidParameters, "characteristic must be 0 or a prime, got " + std::to_string(p));
}

} // namespace

std::vector<CatalogEntry> sl2_catalog(std::int64_t p, std::int64_t max_length) {
    check_char(p);
    std::vector<Candidate> c;
    for (std::int64_t n = 1; n <= max_length; ++n) push_if(c, Family::Mu, {{"n", n}}, p, max_length);
    for (std::int64_t n = 2; 4 * n <= max_length; ++n) push_if(c, Family::BD, {{"n", n}}, p, max_length);
    push_if(c, Family::BT, {}, p, max_length);
    push_if(c, Family::BO, {}, p, max_length);
    push_if(c, Family::BI, {}, p, max_length);
    return build(std::move(c), p);
}

std::vector<CatalogEntry> gl2_catalog(std::int64_t p, std::int64_t max_length) {
    check_char(p);
    std::vector<Candidate> c;
    if (max_length >= 1) push_if(c, Family::MuNQ, {{"n", 1}, {"q", 1}}, p, max_length);
    for (std::int64_t n = 2; n <= max_length; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(q, n) != 1) continue;
            if (q > *nt::mod_inverse(q, n)) continue;
            push_if(c, Family::MuNQ, {{"n", n}, {"q", q}}, p, max_length);
        }
    // m = 1 members of the trivial-quotient families are the binary polyhedral groups.
    for (std::int64_t n = 2; 4 * n <= max_length; ++n) push_if(c, Family::BD, {{"n", n}}, p, max_length);
    push_if(c, Family::BT, {}, p, max_length);
    push_if(c, Family::BO, {}, p, max_length);
    push_if(c, Family::BI, {}, p, max_length);
    for (std::int64_t m = 2; 8 * m <= max_length; ++m)
        for (std::int64_t n = 2; 4 * m * n <= max_length; ++n) {
            if (std::gcd(m, n) != 1) continue;
            push_if(c, m % 2 ? Family::Brieskorn2a : Family::Brieskorn2b, {{"m", m}, {"n", n}}, p, max_length);
        }
    for (std::int64_t m = 2; 24 * m <= max_length; ++m) {
        auto g6 = std::gcd(m, std::int64_t{6});
        if (g6 == 1) {
            push_if(c, Family::Brieskorn3a, {{"m", m}}, p, max_length);
            push_if(c, Family::Brieskorn4, {{"m", m}}, p, max_length);
        }
        if (g6 == 3) push_if(c, Family::Brieskorn3b, {{"m", m}}, p, max_length);
        if (std::gcd(m, std::int64_t{30}) == 1) push_if(c, Family::Brieskorn5, {{"m", m}}, p, max_length);
    }
    return build(std::move(c), p);
}

namespace {

// Canonical (1, q1, q2) classes for mu_m in GL3, optionally only those in SL3.
std::vector<std::pair<std::int64_t, std::int64_t>> cyclic3_classes(std::int64_t m, bool special) {
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (m == 1) return {{1, 1}};
    for (auto q1 : nt::units_mod(m))
        for (auto q2 : nt::units_mod(m)) {
            if (special && (1 + q1 + q2) % m != 0) continue;
            auto canon = canonical_toric_form(CyclicType{m, {1, q1, q2}});
            if (seen.insert(canon.weights).second) out.emplace_back(canon.weights[1], canon.weights[2]);
        }
    return out;
}

} // namespace

std::vector<CatalogEntry> sl3_catalog(std::int64_t p, std::int64_t max_m) {
    check_char(p);
    std::vector<Candidate> c;
    for (std::int64_t m = 1; m <= max_m; ++m)
        for (auto [q1, q2] : cyclic3_classes(m, true))
            push_if(c, Family::Mu, {{"n", m}, {"q1", q1}, {"q2", q2}}, p, max_m);
    auto out = build(std::move(c), p);
    for (const auto& e : out)
        if (!det_character(e.rep).trivial) throw std::logic_error("SL3 entry with nontrivial determinant");
    return out;
}

std::vector<CatalogEntry> gl3_catalog(std::int64_t p, const Gl3Bounds& bounds) {
    check_char(p);
    std::vector<Candidate> c;
    const std::int64_t cyc_max = std::min(bounds.max_m, bounds.max_length);
    for (std::int64_t m = 1; m <= cyc_max; ++m)
        for (auto [q1, q2] : cyclic3_classes(m, false))
            push_if(c, Family::Mu, {{"n", m}, {"q1", q1}, {"q2", q2}}, p, bounds.max_length);
    for (std::int64_t m = 2; m <= bounds.max_m; ++m) {
        for (std::int64_t r = 2; r < m; ++r) {
            if (nt::multiplicative_order(r, m) != 3) continue;
            if (nt::mod(r * r, m) < r) continue; // r and r^2 give conjugate embeddings
            for (std::int64_t f = 2; m * pow3(f) <= bounds.max_length; ++f)
                for (std::int64_t big_n = 1; m * pow3(f) * big_n <= bounds.max_length; ++big_n) {
                    if (big_n % 3 == 0) continue;
                    MetacyclicParams mp{m, pow3(f) * big_n, r};
                    if (!mp.valid(p) || !mp.very_small()) continue;
                    push_if(c, Family::Metacyclic3, {{"m", m}, {"f", f}, {"N", big_n}, {"r", r}}, p,
                            bounds.max_length);
                }
        }
    }
    return build(std::move(c), p);
}

} // namespace lrq
