#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lrq/ade.hpp"
#include "lrq/cyclic_type.hpp"

namespace lrq {

/// Type 1/n(1, q1, q2).
struct CyclicThreefold {
    std::int64_t n = 1, q1 = 1, q2 = 1;
};

/// Type 1/m(1, r, r^2) semidirect mu_{3^f N}, twisted by a primitive 3^(f-1)-th root.
struct MetacyclicThreefold {
    std::int64_t m = 1, f = 2, N = 1, r = 1;
};

using ThreefoldType = std::variant<CyclicThreefold, MetacyclicThreefold>;

/// InvalidParameters when the tuple violates the type's conditions.
void validate(const ThreefoldType& t);
/// Scales a 3-weight cyclic type so that its first weight is 1.
ThreefoldType threefold_from_cyclic(const CyclicType& t);
std::string str(const ThreefoldType& t);

/// Primitive cube roots of unity in F_p (empty unless p = 1 mod 3).
std::vector<std::int64_t> primitive_cube_roots(std::int64_t p);

/// Infinitesimal rigidity. For a metacyclic type with p | m, f = 2, N = 1 and
/// r mod p a primitive cube root, the answer depends on which root of F_p
/// corresponds to the matrix entry zeta_3; MissingIdentification if none given.
bool is_rigid(const ThreefoldType& t, std::int64_t p, std::optional<std::int64_t> cube_root = std::nullopt);

struct DeformationSpace {
    bool rigid = true;
    /// W(k)[eps]/(eps^2, p^a eps); zero when rigid.
    int exponent = 0;
    std::int64_t p = 0;

    std::string str() const;
    std::string reduced() const { return "Spec W(k)"; }
};

DeformationSpace deformation_space(const ThreefoldType& t, std::int64_t p,
                                   std::optional<std::int64_t> cube_root = std::nullopt);

/// True for every d >= 4; BadDimension below.
bool rigidity_dim_ge_4(int d);

/// Multiset of ADE components, kept sorted. D2 and D3 are normalized to 2A1 and A3.
class RootDiagram {
public:
    RootDiagram() = default;
    explicit RootDiagram(std::vector<AdeType> components);
    static RootDiagram single(const AdeType& t) { return RootDiagram({t}); }

    const std::vector<AdeType>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    int rank() const;
    RootDiagram operator+(const RootDiagram& o) const;
    /// "", "A1", "2A1+A3" style.
    std::string str() const;

    friend auto operator<=>(const RootDiagram&, const RootDiagram&) = default;

private:
    std::vector<AdeType> comps_;
};

/// "A3", "2A1+D4", "0" or "" for the empty diagram; BadInput otherwise.
RootDiagram parse_root_diagram(const std::string& text);

/// Types of root subsystems, closed under vertex deletion and extended-diagram
/// deletion; includes g0 and the empty diagram.
std::set<RootDiagram> rdp_specializations(const RootDiagram& g0);

struct LengthReport {
    std::int64_t length0 = 0;
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool monotone() const { return violations.empty(); }
};
LengthReport length_monotonic_check(const AdeType& g0);

struct Dominance {
    bool dominates = false;
    std::int64_t n = 0, n_prime = 0;
};
/// Entry-wise a'_i <= a_i over a', with len(a') <= len(a). BadSequence on
/// empty input or entries below 2.
Dominance cyclic_deformation_dominance(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& a_prime);

} // namespace lrq
