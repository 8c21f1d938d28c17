#include "lrq/cycmatrix.hpp"

#include <numeric>

#include "lrq/errors.hpp"
#include "lrq/numtheory.hpp"

namespace lrq {

namespace {

void require_same_shape(const CycMatrix& a, const CycMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        raise(ErrorKind::DimensionMismatch, std::string(op) + ": shapes differ");
}

// Scales a row by a positive rational so its entries have coprime integer
// coefficients. Keeps fraction-free elimination from blowing up.
void make_primitive(std::vector<CycNum>& row, std::int64_t m) {
    std::int64_t den = 1;
    for (const auto& x : row)
        if (!x.is_zero()) den = nt::lcm(den, x.denominator());
    std::int64_t g = 0;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        std::int64_t s = den / x.denominator();
        for (auto c : x.numerators()) g = std::gcd(g, nt::checked_mul(c, s));
    }
    if (g == 0 || (g == 1 && den == 1)) return;
    CycNum f = CycNum::rational(Rational(den, g), m);
    for (auto& x : row)
        if (!x.is_zero()) x *= f;
}

} // namespace

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, std::int64_t conductor)
    : rows_(rows), cols_(cols), m_(conductor),
      e_(rows * cols, CycNum::rational(Rational(0), conductor)) {}

CycMatrix CycMatrix::identity(std::size_t n, std::int64_t conductor) {
    CycMatrix r(n, n, conductor);
    for (std::size_t i = 0; i < n; ++i) r.e_[i * n + i] = CycNum::rational(Rational(1), conductor);
    return r;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& d) {
    std::int64_t m = 1;
    for (const auto& x : d) m = common_conductor(m, x.conductor());
    CycMatrix r(d.size(), d.size(), m);
    for (std::size_t i = 0; i < d.size(); ++i) r.e_[i * d.size() + i] = promote(d[i], m);
    return r;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<CycNum>>& rows) {
    if (rows.empty()) return CycMatrix();
    const std::size_t c = rows[0].size();
    std::int64_t m = 1;
    for (const auto& row : rows) {
        if (row.size() != c) raise(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (const auto& x : row) m = common_conductor(m, x.conductor());
    }
    CycMatrix r(rows.size(), c, m);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) r.e_[i * c + j] = promote(rows[i][j], m);
    return r;
}

void CycMatrix::set(std::size_t i, std::size_t j, const CycNum& v) {
    if (m_ % v.conductor() != 0) *this = with_conductor(common_conductor(m_, v.conductor()));
    e_.at(i * cols_ + j) = promote(v, m_);
}

CycMatrix CycMatrix::with_conductor(std::int64_t m) const {
    if (m == m_) return *this;
    CycMatrix r = *this;
    r.m_ = m;
    for (auto& x : r.e_) x = promote(x, m);
    return r;
}

CycMatrix CycMatrix::operator-() const {
    CycMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    require_same_shape(a, b, "add");
    std::int64_t m = common_conductor(a.m_, b.m_);
    CycMatrix r = a.with_conductor(m);
    CycMatrix bb = b.with_conductor(m);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += bb.e_[i];
    return r;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) { return a + (-b); }

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) raise(ErrorKind::DimensionMismatch, "multiply: inner dimensions differ");
    if (a.m_ != b.m_) {
        std::int64_t m = common_conductor(a.m_, b.m_);
        return a.with_conductor(m) * b.with_conductor(m);
    }
    CycMatrix r(a.rows_, b.cols_, a.m_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNum& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycNum& y = b.at(k, j);
                if (y.is_zero()) continue;
                r.e_[i * b.cols_ + j] += x * y;
            }
        }
    }
    return r;
}

CycMatrix operator*(const CycNum& s, const CycMatrix& a) {
    std::int64_t m = common_conductor(a.m_, s.conductor());
    CycMatrix r = a.with_conductor(m);
    CycNum ss = promote(s, m);
    for (auto& x : r.e_)
        if (!x.is_zero()) x *= ss;
    return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const CycNum& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

CycNum CycMatrix::trace() const {
    if (!square()) raise(ErrorKind::DimensionMismatch, "trace of non-square matrix");
    CycNum t = CycNum::rational(Rational(0), m_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CycNum CycMatrix::det() const {
    if (!square()) raise(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return CycNum::rational(Rational(1), m_);
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n == 3) {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }
    std::vector<std::vector<CycNum>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i].assign(e_.begin() + i * n, e_.begin() + (i + 1) * n);
    CycNum d = CycNum::rational(Rational(1), m_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return CycNum::rational(Rational(0), m_);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        CycNum inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            CycNum f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

std::size_t CycMatrix::rank() const {
    std::vector<std::vector<CycNum>> a(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        a[i].assign(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && a[piv][c].is_zero()) ++piv;
        if (piv == rows_) continue;
        std::swap(a[piv], a[r]);
        const CycNum p = a[r][c];
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (a[i][c].is_zero()) continue;
            const CycNum q = a[i][c];
            // row_i <- p * row_i - q * row_r, no division.
            for (std::size_t j = c; j < cols_; ++j) a[i][j] = p * a[i][j] - q * a[r][j];
            make_primitive(a[i], m_);
        }
        ++r;
    }
    return r;
}

std::size_t CycMatrix::hash() const {
    std::size_t h = rows_ * 131 + cols_;
    for (const auto& x : e_) h = h * 1000003u ^ x.hash();
    return h;
}

} // namespace lrq
