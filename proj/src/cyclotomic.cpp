#include "lrq/cyclotomic.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lrq/errors.hpp"
#include "lrq/kernels.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

namespace detail {

struct Field {
    std::int64_t m = 1;
    std::size_t phi = 1;
    std::vector<std::int64_t> poly;                // Phi_m, monic, degree phi
    std::vector<std::vector<std::int64_t>> reduce; // x^k mod Phi_m for k in [phi, m)
};

namespace {

using Poly = std::vector<std::int64_t>;

int moebius(std::int64_t n) {
    int sign = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

Poly times_xd_minus_1(const Poly& p, std::int64_t d) {
    Poly q(p.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + static_cast<std::size_t>(d)] = nt::checked_add(q[i + static_cast<std::size_t>(d)], p[i]);
        q[i] = nt::checked_add(q[i], -p[i]);
    }
    return q;
}

// Exact quotient p / (x^d - 1): p[i] = q[i-d] - q[i].
Poly div_xd_minus_1(const Poly& p, std::int64_t d) {
    auto du = static_cast<std::size_t>(d);
    Poly q(p.size() - du, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::int64_t prev = i >= du ? q[i - du] : 0;
        q[i] = nt::checked_add(prev, -p[i]);
    }
    return q;
}

Poly compute_cyclotomic(std::int64_t m) {
    Poly p{1};
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (auto d : divisors)
        if (moebius(m / d) == 1) p = times_xd_minus_1(p, d);
    for (auto d : divisors)
        if (moebius(m / d) == -1) p = div_xd_minus_1(p, d);
    return p;
}

std::unique_ptr<Field> build_field(std::int64_t m) {
    auto f = std::make_unique<Field>();
    f->m = m;
    f->poly = compute_cyclotomic(m);
    f->phi = f->poly.size() - 1;
    const std::size_t phi = f->phi;
    // r = x^phi mod Phi = -(Phi - x^phi); then r <- x * r reduced.
    Poly r(phi);
    for (std::size_t i = 0; i < phi; ++i) r[i] = -f->poly[i];
    for (std::int64_t k = static_cast<std::int64_t>(phi); k < m; ++k) {
        f->reduce.push_back(r);
        std::int64_t top = r[phi - 1];
        Poly next(phi, 0);
        for (std::size_t i = phi - 1; i > 0; --i) next[i] = r[i - 1];
        for (std::size_t i = 0; i < phi; ++i)
            next[i] = nt::checked_add(next[i], nt::checked_mul(-top, f->poly[i]));
        r = std::move(next);
    }
    return f;
}

} // namespace

const Field& field(std::int64_t m) {
    if (m < 1) raise(ErrorKind::BadInput, "conductor must be positive");
    if (m > kMaxConductor)
        raise(ErrorKind::ConductorTooLarge,
              "conductor " + std::to_string(m) + " exceeds " + std::to_string(kMaxConductor));
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = build_field(m);
    return *slot;
}

} // namespace detail

namespace {

std::int64_t gcd_all(const std::vector<std::int64_t>& v, std::int64_t g) {
    for (auto x : v) {
        if (g == 1) break;
        g = std::gcd(g, x);
    }
    return g;
}

// Reduces an integer coefficient vector of any length into the power basis of f.
std::vector<std::int64_t> reduce_poly(const detail::Field& f, std::vector<std::int64_t> acc) {
    const auto m = static_cast<std::size_t>(f.m);
    for (std::size_t k = acc.size(); k-- > m;) {
        if (acc[k] != 0) {
            acc[k % m] = nt::checked_add(acc[k % m], acc[k]);
            acc[k] = 0;
        }
    }
    if (acc.size() > m) acc.resize(m);
    if (acc.size() < f.phi) acc.resize(f.phi, 0);
    for (std::size_t k = acc.size(); k-- > f.phi;) {
        if (acc[k] != 0)
            kernels::accumulate_scaled(acc.data(), acc[k], f.reduce[k - f.phi].data(), f.phi);
    }
    acc.resize(f.phi);
    return acc;
}

mpq_class to_mpq(std::int64_t n, std::int64_t d) {
    mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    q.canonicalize();
    return q;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) raise(ErrorKind::ArithmeticOverflow, "coefficient exceeds int64 range");
    return z.get_si();
}

// Solves A y = b over Q. A is rows x cols (rows >= cols). Returns nullopt when
// inconsistent or not of full column rank.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a,
                                            std::vector<mpq_class> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) return std::nullopt;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        mpq_class inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class factor = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
            b[i] -= factor * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<mpq_class> y(cols);
    for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
    return y;
}

CycNum from_mpq(std::int64_t m, const std::vector<mpq_class>& y) {
    std::vector<Rational> coeffs;
    coeffs.reserve(y.size());
    for (const auto& q : y) coeffs.emplace_back(mpz_to_i64(q.get_num()), mpz_to_i64(q.get_den()));
    return CycNum::from_poly(m, coeffs);
}

} // namespace

CycNum::CycNum() : f_(&detail::field(1)), c_(1, 0) {}

CycNum::CycNum(const Rational& r) : f_(&detail::field(1)), c_{r.num()}, den_(r.den()) {}

CycNum CycNum::rational(const Rational& r, std::int64_t m) {
    CycNum x;
    x.f_ = &detail::field(m);
    x.c_.assign(x.f_->phi, 0);
    x.c_[0] = r.num();
    x.den_ = r.den();
    return x;
}

CycNum CycNum::from_poly(std::int64_t m, const std::vector<Rational>& coeffs) {
    CycNum x;
    x.f_ = &detail::field(m);
    std::int64_t den = 1;
    for (const auto& c : coeffs) den = nt::lcm(den, c.den());
    std::vector<std::int64_t> acc(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        acc[i] = nt::checked_mul(coeffs[i].num(), den / coeffs[i].den());
    x.c_ = reduce_poly(*x.f_, std::move(acc));
    x.den_ = den;
    x.normalize();
    return x;
}

std::int64_t CycNum::conductor() const { return f_->m; }
std::size_t CycNum::degree() const { return f_->phi; }

Rational CycNum::coeff(std::size_t i) const { return Rational(c_.at(i), den_); }

std::vector<Rational> CycNum::coefficients() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (auto c : c_) out.emplace_back(c, den_);
    return out;
}

bool CycNum::is_zero() const {
    for (auto c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1 && den_ == 1; }

Rational CycNum::rational_part() const { return Rational(c_[0], den_); }

void CycNum::normalize() {
    std::int64_t g = gcd_all(c_, den_);
    if (g == 0 || std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c == 0; })) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : c_) c /= g;
        den_ /= g;
    }
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (f_ != o.f_) {
        std::int64_t m = common_conductor(conductor(), o.conductor());
        *this = promote(*this, m);
        return *this += promote(o, m);
    }
    if (o.is_zero()) return *this;
    std::int64_t den = nt::lcm(den_, o.den_);
    std::int64_t sa = den / den_, sb = den / o.den_;
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = nt::checked_add(nt::checked_mul(c_[i], sa), nt::checked_mul(o.c_[i], sb));
    den_ = den;
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::multiply_same(const CycNum& o) const {
    CycNum r;
    r.f_ = f_;
    const std::size_t phi = f_->phi;
    if (is_zero() || o.is_zero()) {
        r.c_.assign(phi, 0);
        return r;
    }
    if (o.is_rational() || is_rational()) {
        const CycNum& s = is_rational() ? *this : o;
        const CycNum& v = is_rational() ? o : *this;
        r.c_.assign(phi, 0);
        kernels::accumulate_scaled(r.c_.data(), s.c_[0], v.c_.data(), phi);
    } else {
        std::vector<std::int64_t> acc(2 * phi - 1, 0);
        for (std::size_t i = 0; i < phi; ++i)
            if (c_[i] != 0) kernels::accumulate_scaled(acc.data() + i, c_[i], o.c_.data(), phi);
        r.c_ = reduce_poly(*f_, std::move(acc));
    }
    r.den_ = nt::checked_mul(den_, o.den_);
    r.normalize();
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (f_ != o.f_) {
        std::int64_t m = common_conductor(conductor(), o.conductor());
        return *this = promote(*this, m).multiply_same(promote(o, m));
    }
    return *this = multiply_same(o);
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::inverse() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
    if (is_rational()) return rational(Rational(c_[0], den_).inverse(), conductor());
    // Solve (multiplication-by-numerator matrix) y = 1, then scale by den.
    const std::size_t phi = f_->phi;
    std::vector<std::vector<mpq_class>> a(phi, std::vector<mpq_class>(phi));
    std::vector<std::int64_t> shifted(phi + phi, 0);
    for (std::size_t j = 0; j < phi; ++j) {
        std::fill(shifted.begin(), shifted.end(), 0);
        for (std::size_t i = 0; i < phi; ++i) shifted[i + j] = c_[i];
        auto col = reduce_poly(*f_, shifted);
        for (std::size_t i = 0; i < phi; ++i) a[i][j] = to_mpq(col[i], 1);
    }
    std::vector<mpq_class> b(phi, 0);
    b[0] = 1;
    auto y = solve(std::move(a), std::move(b));
    if (!y) raise(ErrorKind::DivisionByZero, "element is not invertible");
    for (auto& q : *y) q *= to_mpq(den_, 1);
    return from_mpq(conductor(), *y);
}

CycNum CycNum::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result = rational(Rational(1), conductor());
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.f_ == b.f_) return a.den_ == b.den_ && a.c_ == b.c_;
    std::int64_t m = common_conductor(a.conductor(), b.conductor());
    return promote(a, m) == promote(b, m);
}

std::complex<double> CycNum::evaluate(std::int64_t k) const {
    const double tau = 2.0 * std::acos(-1.0);
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double ang = tau * static_cast<double>(nt::mod(k * static_cast<std::int64_t>(i), f_->m)) /
                     static_cast<double>(f_->m);
        s += static_cast<double>(c_[i]) * std::polar(1.0, ang);
    }
    return s / static_cast<double>(den_);
}

std::size_t CycNum::hash() const {
    std::size_t h = std::hash<std::int64_t>{}(f_->m) ^ (std::hash<std::int64_t>{}(den_) * 31);
    for (auto c : c_) h = h * 1000003u ^ std::hash<std::int64_t>{}(c);
    return h;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational q(c_[i], den_);
        if (!first) os << (q.num() < 0 ? " - " : " + ");
        else if (q.num() < 0) os << "-";
        first = false;
        Rational a = q.num() < 0 ? -q : q;
        bool unit = a.num() == 1 && a.den() == 1;
        if (i == 0) {
            os << (a.den() == 1 ? std::to_string(a.num()) : a.str());
        } else {
            if (!unit) os << (a.den() == 1 ? std::to_string(a.num()) : a.str()) << "*";
            os << "z" << f_->m;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

CycNum root_of_unity(std::int64_t m, std::int64_t k) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(nt::mod(k, m)) + 1);
    coeffs.back() = 1;
    return CycNum::from_poly(m, coeffs);
}

CycNum promote(const CycNum& x, std::int64_t m) {
    if (m < 1 || m % x.conductor() != 0)
        raise(ErrorKind::NotDivisible, "conductor " + std::to_string(x.conductor()) +
                                           " does not divide " + std::to_string(m));
    if (m == x.conductor()) return x;
    const auto& f = detail::field(m);
    const std::int64_t step = m / x.conductor();
    std::vector<std::int64_t> acc(static_cast<std::size_t>(step) * (x.c_.size() - 1) + 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) acc[i * static_cast<std::size_t>(step)] = x.c_[i];
    CycNum r;
    r.f_ = &f;
    r.c_ = reduce_poly(f, std::move(acc));
    r.den_ = x.den_;
    r.normalize();
    return r;
}

std::optional<CycNum> demote(const CycNum& x, std::int64_t m) {
    if (m < 1 || x.conductor() % m != 0)
        raise(ErrorKind::NotDivisible, std::to_string(m) + " does not divide conductor " +
                                           std::to_string(x.conductor()));
    if (m == x.conductor()) return x;
    const auto& small = detail::field(m);
    const std::size_t rows = x.degree(), cols = small.phi;
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
        auto col = promote(root_of_unity(m, static_cast<std::int64_t>(j)), x.conductor());
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = to_mpq(col.numerators()[i], col.denominator());
    }
    std::vector<mpq_class> b(rows);
    for (std::size_t i = 0; i < rows; ++i) b[i] = to_mpq(x.numerators()[i], x.denominator());
    auto y = solve(std::move(a), std::move(b));
    if (!y) return std::nullopt;
    return from_mpq(m, *y);
}

std::int64_t common_conductor(std::int64_t a, std::int64_t b) {
    std::int64_t m = nt::lcm(a, b);
    if (m > kMaxConductor)
        raise(ErrorKind::ConductorTooLarge,
              "lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") exceeds " +
                  std::to_string(kMaxConductor));
    return m;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) { return detail::field(m).poly; }

} // namespace lrq
