#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "almax/field.hpp"

namespace almax {

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

    static FpMatrix identity(const PrimeField& field, std::size_t n);
    static FpMatrix random(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    friend bool operator==(const FpMatrix& a, const FpMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
    std::optional<FpMatrix> inverse() const;
    /// Basis of the right kernel, one vector per free column.
    std::vector<std::vector<FieldElement>> kernel() const;

private:
    PrimeField field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

FpMatrix random_invertible_matrix(const PrimeField& field, std::size_t n, Rng& rng);

}  // namespace almax
