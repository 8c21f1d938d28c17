#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrq/cyclotomic.hpp"

namespace lrq {

/// Dense matrix over Q(zeta_m). All entries share the matrix conductor.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(std::size_t rows, std::size_t cols, std::int64_t conductor = 1);

    static CycMatrix identity(std::size_t n, std::int64_t conductor = 1);
    static CycMatrix diagonal(const std::vector<CycNum>& d);
    /// Entries may have mixed conductors; they are promoted to the lcm.
    static CycMatrix from_rows(const std::vector<std::vector<CycNum>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t conductor() const { return m_; }
    bool square() const { return rows_ == cols_; }

    const CycNum& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const CycNum& v);

    CycMatrix with_conductor(std::int64_t m) const;

    CycMatrix operator-() const;
    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const CycNum& s, const CycMatrix& a);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

    bool is_identity() const;
    CycNum trace() const;
    CycNum det() const;
    std::size_t rank() const;

    std::size_t hash() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::int64_t m_ = 1;
    std::vector<CycNum> e_;
};

struct CycMatrixHash {
    std::size_t operator()(const CycMatrix& a) const { return a.hash(); }
};

} // namespace lrq
