#pragma once

#include <string>
#include <vector>

#include "weilrep/cyclotomic.hpp"

namespace weilrep {

/// Dense matrix over cyclotomic numbers, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    explicit Matrix(std::vector<std::vector<Cyclotomic>> rows);

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<Cyclotomic>& entries);
    /// Block-diagonal sum.
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Cyclotomic& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Cyclotomic& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(const Cyclotomic& scalar) const;
    bool operator==(const Matrix& other) const;

    Matrix transpose() const;
    Matrix kronecker(const Matrix& other) const;
    Cyclotomic trace() const;
    bool is_zero() const;

    /// Throws DomainError when singular.
    Matrix inverse() const;
    Matrix pow(long e) const;
    int rank() const;
    /// Basis of {v : A v = 0}, one column per basis vector.
    Matrix nullspace() const;
    /// det(1 - A T), constant term first.
    ExactPolynomial reverse_charpoly() const;

    /// Columns `cols` of this matrix, in order.
    Matrix select_columns(const std::vector<int>& cols) const;
    /// Solve this * X = B for X when this has full column rank and B lies in the column span.
    Matrix solve(const Matrix& b) const;

    /// "[[a, b], [c, d]]" with cyc(...) entries.
    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cyclotomic> data_;
};

}  // namespace weilrep
