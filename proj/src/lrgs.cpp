#include "lrq/lrgs.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

using Index = FiniteMatrixGroup::Index;

LrGroupScheme make_scheme(std::int64_t p, std::shared_ptr<const FiniteMatrixGroup> abs) {
    if (p != 0 && !nt::is_prime(p))
        raise(ErrorKind::InvalidParameters, "characteristic must be 0 or a prime, got " + std::to_string(p));
    if (!unique_abelian_sylow(*abs, p))
        raise(ErrorKind::NotLinearlyReductive,
              "group of order " + std::to_string(abs->order()) + " has no unique abelian " +
                  std::to_string(p) + "-Sylow subgroup");
    LrGroupScheme s;
    s.p = p;
    s.abs = std::move(abs);
    s.sylow = p == 0 ? std::vector<Index>{0} : p_elements(*s.abs, p);
    s.sylow_structure = quotient_invariant_factors(*s.abs, s.sylow, {0});
    return s;
}

LrGroupScheme make_scheme(std::int64_t p, FiniteMatrixGroup abs) {
    return make_scheme(p, std::make_shared<const FiniteMatrixGroup>(std::move(abs)));
}

namespace {

std::vector<CycMatrix> extend(const FiniteMatrixGroup& g, const std::vector<CycMatrix>& gen_images,
                              std::size_t dim) {
    std::int64_t m = 1;
    for (const auto& a : gen_images) m = common_conductor(m, a.conductor());
    std::vector<CycMatrix> imgs(g.order());
    imgs[0] = CycMatrix::identity(dim, m);
    for (std::size_t j = 1; j < g.order(); ++j) {
        auto i = static_cast<Index>(j);
        imgs[j] = imgs[g.parent(i)] * gen_images[g.parent_generator(i)];
    }
    return imgs;
}

CycMatrix block_diag_identity(const CycMatrix& a, std::size_t k) {
    const std::size_t n = a.rows() + k;
    CycMatrix r = CycMatrix::identity(n, a.conductor());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    return r;
}

} // namespace

LrRepresentation make_representation(const LrGroupScheme& scheme, const std::vector<CycMatrix>& generator_images) {
    const auto& g = *scheme.abs;
    if (generator_images.size() != g.generators().size())
        raise(ErrorKind::DimensionMismatch, "need one image per generator (" +
                                                std::to_string(g.generators().size()) + ")");
    std::size_t dim = generator_images.empty() ? g.dimension() : generator_images[0].rows();
    for (const auto& a : generator_images)
        if (a.rows() != dim || a.cols() != dim)
            raise(ErrorKind::DimensionMismatch, "images must be square of one dimension");
    LrRepresentation rep;
    rep.scheme = scheme;
    rep.dim = dim;
    rep.generator_images = generator_images;
    rep.images = extend(g, generator_images, dim);
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t k = 0; k < generator_images.size(); ++k) {
            Index target = g.mul(static_cast<Index>(i), g.generators()[k]);
            if (!(rep.images[i] * generator_images[k] == rep.images[target]))
                raise(ErrorKind::NotAHomomorphism,
                      "image of element " + std::to_string(i) + " times generator " + std::to_string(k) +
                          " disagrees with the group table");
        }
    return rep;
}

LrRepresentation natural_representation(const LrGroupScheme& scheme) {
    LrRepresentation rep;
    rep.scheme = scheme;
    rep.dim = scheme.abs->dimension();
    rep.generator_images = scheme.abs->generator_matrices();
    rep.images = scheme.abs->elements();
    return rep;
}

LrRepresentation add_trivial(const LrRepresentation& rep, std::size_t k) {
    LrRepresentation r;
    r.scheme = rep.scheme;
    r.dim = rep.dim + k;
    for (const auto& a : rep.generator_images) r.generator_images.push_back(block_diag_identity(a, k));
    for (const auto& a : rep.images) r.images.push_back(block_diag_identity(a, k));
    return r;
}

std::int64_t lambda(const LrRepresentation& rep) {
    std::int64_t best = 0;
    const auto d = static_cast<std::int64_t>(rep.dim);
    for (std::size_t i = 1; i < rep.images.size(); ++i) {
        const CycMatrix& a = rep.images[i];
        CycMatrix diff = a - CycMatrix::identity(rep.dim, a.conductor());
        best = std::max(best, d - static_cast<std::int64_t>(diff.rank()));
        if (best == d) break;
    }
    return best;
}

std::int64_t lambda_character_sum(const LrRepresentation& rep) {
    const auto& g = *rep.scheme.abs;
    std::vector<CycNum> traces;
    traces.reserve(rep.images.size());
    for (const auto& a : rep.images) traces.push_back(a.trace());
    std::int64_t best = 0;
    for (std::size_t i = 1; i < g.order(); ++i) {
        auto x = static_cast<Index>(i);
        CycNum sum = traces[0];
        Index y = x;
        while (y != 0) {
            sum += traces[y];
            y = g.mul(y, x);
        }
        if (!sum.is_rational())
            raise(ErrorKind::ArithmeticOverflow, "character sum is not rational");
        Rational fixed = sum.rational_part() / Rational(g.element_order(x));
        if (!fixed.is_integer()) raise(ErrorKind::ArithmeticOverflow, "character sum is not an integer multiple");
        best = std::max(best, fixed.num());
    }
    return best;
}

Predicates predicates(const LrRepresentation& rep) {
    Predicates out;
    const auto lam = lambda(rep);
    const auto d = static_cast<std::int64_t>(rep.dim);
    out.very_small = lam == 0;
    out.small = lam <= d - 2;
    out.faithful = true;
    for (std::size_t i = 1; i < rep.images.size(); ++i)
        if (rep.images[i].is_identity()) {
            out.faithful = false;
            break;
        }
    out.gorenstein = true;
    for (const auto& a : rep.generator_images)
        if (!a.det().is_one()) {
            out.gorenstein = false;
            break;
        }
    return out;
}

SchemeCharacter det_character(const LrRepresentation& rep) {
    const auto& g = *rep.scheme.abs;
    std::vector<CycNum> gen_det;
    for (const auto& a : rep.generator_images) gen_det.push_back(a.det());
    SchemeCharacter chi;
    chi.values.resize(g.order());
    chi.values[0] = CycNum(1);
    for (std::size_t j = 1; j < g.order(); ++j) {
        auto i = static_cast<Index>(j);
        chi.values[j] = chi.values[g.parent(i)] * gen_det[g.parent_generator(i)];
    }
    chi.trivial = std::all_of(chi.values.begin(), chi.values.end(), [](const CycNum& v) { return v.is_one(); });
    return chi;
}

namespace {

// c with g x g^-1 = x^c, where x has order n.
std::int64_t conjugation_exponent(const FiniteMatrixGroup& g, Index elem, Index x, std::int64_t n) {
    Index y = g.mul(g.mul(elem, x), g.inverse(elem));
    Index pw = 0;
    for (std::int64_t c = 0; c < n; ++c) {
        if (pw == y) return c;
        pw = g.mul(pw, x);
    }
    raise(ErrorKind::ConnectedPartNotCyclic, "conjugate leaves the cyclic Sylow subgroup");
}

} // namespace

AdCharacter ad_character(const LrGroupScheme& scheme) {
    const auto& g = *scheme.abs;
    AdCharacter ad;
    ad.p = scheme.p;
    ad.values.assign(g.order(), 1);
    ad.generator_values.assign(g.generators().size(), 1);
    if (scheme.is_etale()) {
        ad.etale = true;
        return ad;
    }
    const auto n = scheme.connected_length();
    std::optional<Index> x;
    for (Index e : scheme.sylow)
        if (g.element_order(e) == n) {
            x = e;
            break;
        }
    if (!x) raise(ErrorKind::ConnectedPartNotCyclic, "the " + std::to_string(scheme.p) + "-Sylow subgroup is not cyclic");
    ad.sylow_generator = *x;

    // Any other generator x^u of the Sylow gives the same exponent.
    std::optional<Index> x2;
    for (std::int64_t u = 2; u < n; ++u)
        if (std::gcd(u, n) == 1) {
            x2 = g.power(*x, u);
            break;
        }

    for (std::size_t i = 0; i < g.order(); ++i) {
        std::int64_t c = conjugation_exponent(g, static_cast<Index>(i), *x, n);
        if (x2 && conjugation_exponent(g, static_cast<Index>(i), *x2, n) != c)
            raise(ErrorKind::ConnectedPartNotCyclic, "conjugation exponent depends on the Sylow generator");
        ad.values[i] = nt::mod(c, scheme.p);
    }
    for (std::size_t k = 0; k < g.generators().size(); ++k) ad.generator_values[k] = ad.values[g.generators()[k]];
    ad.trivial = std::all_of(ad.values.begin(), ad.values.end(), [](std::int64_t v) { return v == 1; });
    return ad;
}

} // namespace lrq
