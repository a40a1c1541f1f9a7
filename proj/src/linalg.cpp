#include "almax/linalg.hpp"

#include <stdexcept>

namespace almax {

FpMatrix::FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols)
{
}

FpMatrix FpMatrix::identity(const PrimeField& field, std::size_t n)
{
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

FpMatrix FpMatrix::random(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng)
{
    FpMatrix m(field, rows, cols);
    for (auto& x : m.data_) x = random_field_element(rng, field);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const
{
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FpMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            FieldElement a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
        }
    return out;
}

std::vector<std::size_t> FpMatrix::rref()
{
    std::vector<std::size_t> pivots;
    const std::uint64_t p = field_.characteristic();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
        FieldElement inv = field_.inv((*this)(row, col));
        FieldElement* prow = &data_[row * cols_];
        for (std::size_t j = col; j < cols_; ++j) prow[j] = field_.mul(prow[j], inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            FieldElement* irow = &data_[i * cols_];
            std::uint64_t f = irow[col].value;
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            for (std::size_t j = col; j < cols_; ++j)
                if (prow[j].value != 0)
                    irow[j].value = static_cast<std::uint32_t>((irow[j].value + nf * prow[j].value) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t FpMatrix::rank() const
{
    // forward elimination only
    FpMatrix m = *this;
    const std::uint64_t p = field_.characteristic();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = col; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
        FieldElement inv = field_.inv(m(row, col));
        FieldElement* prow = &m.data_[row * cols_];
        for (std::size_t j = col; j < cols_; ++j) prow[j] = field_.mul(prow[j], inv);
        for (std::size_t i = row + 1; i < rows_; ++i) {
            FieldElement* irow = &m.data_[i * cols_];
            std::uint64_t f = irow[col].value;
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            for (std::size_t j = col; j < cols_; ++j)
                if (prow[j].value != 0)
                    irow[j].value = static_cast<std::uint32_t>((irow[j].value + nf * prow[j].value) % p);
        }
        ++row;
    }
    return row;
}

std::optional<FpMatrix> FpMatrix::inverse() const
{
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    FpMatrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = field_.one();
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    FpMatrix out(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

std::vector<std::vector<FieldElement>> FpMatrix::kernel() const
{
    FpMatrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols_);
        v[free] = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix random_invertible_matrix(const PrimeField& field, std::size_t n, Rng& rng)
{
    for (;;) {
        FpMatrix m = FpMatrix::random(field, n, n, rng);
        if (m.is_invertible()) return m;
    }
}

}  // namespace almax
