#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrq/rational.hpp"

namespace lrq {

inline constexpr std::int64_t kMaxConductor = 2520;

namespace detail {
struct Field;
const Field& field(std::int64_t m);
} // namespace detail

/// Element of Q(zeta_m) in the power basis modulo the m-th cyclotomic
/// polynomial. Stored as integer coefficients over one positive common
/// denominator, kept primitive, so equal values have equal storage.
class CycNum {
public:
    CycNum();
    CycNum(const Rational& r); // NOLINT(google-explicit-constructor)
    CycNum(std::int64_t v) : CycNum(Rational(v)) {} // NOLINT(google-explicit-constructor)

    static CycNum rational(const Rational& r, std::int64_t m);
    /// Any-length coefficient list, read as a polynomial in zeta_m and reduced.
    static CycNum from_poly(std::int64_t m, const std::vector<Rational>& coeffs);

    std::int64_t conductor() const;
    std::size_t degree() const; // phi(m)

    Rational coeff(std::size_t i) const;
    std::vector<Rational> coefficients() const;
    const std::vector<std::int64_t>& numerators() const { return c_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Value as a rational; only meaningful when is_rational().
    Rational rational_part() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    /// Equal as field elements; mixed conductors compare in the compositum.
    friend bool operator==(const CycNum& a, const CycNum& b);

    CycNum inverse() const;
    CycNum pow(std::int64_t e) const;

    /// Value under zeta_m -> exp(2 pi i k / m).
    std::complex<double> evaluate(std::int64_t k = 1) const;

    std::size_t hash() const;
    std::string str() const;

private:
    friend CycNum promote(const CycNum& x, std::int64_t m);
    void normalize();
    CycNum multiply_same(const CycNum& o) const;

    const detail::Field* f_;
    std::vector<std::int64_t> c_;
    std::int64_t den_ = 1;
};

/// zeta_m^(k mod m).
CycNum root_of_unity(std::int64_t m, std::int64_t k = 1);
/// Same element with conductor m; NotDivisible unless conductor | m.
CycNum promote(const CycNum& x, std::int64_t m);
/// Element of Q(zeta_m) equal to x, if it lies there. Needs m | conductor(x).
std::optional<CycNum> demote(const CycNum& x, std::int64_t m);
/// lcm of conductors, ConductorTooLarge past kMaxConductor.
std::int64_t common_conductor(std::int64_t a, std::int64_t b);

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

struct CycNumHash {
    std::size_t operator()(const CycNum& x) const { return x.hash(); }
};

} // namespace lrq
