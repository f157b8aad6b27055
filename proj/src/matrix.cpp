#include "weilrep/matrix.hpp"

#include <sstream>

#include "weilrep/errors.hpp"

namespace weilrep {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
        }
        Cyclotomic inv = m(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Cyclotomic factor = m(r, col);
            for (int c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

Matrix::Matrix(std::vector<std::vector<Cyclotomic>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw DomainError("ragged matrix rows");
        for (auto& v : row) data_.push_back(std::move(v));
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Cyclotomic>& entries) {
    int n = static_cast<int>(entries.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
    return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch in +");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += other.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch in -");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= other.data_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix shape mismatch in *");
    Matrix m(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Cyclotomic& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < other.cols_; ++c) {
                if (!other(k, c).is_zero()) m(r, c) += a * other(k, c);
            }
        }
    }
    return m;
}

Matrix Matrix::operator*(const Cyclotomic& scalar) const {
    Matrix m = *this;
    for (auto& v : m.data_) v *= scalar;
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Matrix Matrix::kronecker(const Matrix& other) const {
    Matrix m(rows_ * other.rows_, cols_ * other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            for (int r2 = 0; r2 < other.rows_; ++r2)
                for (int c2 = 0; c2 < other.cols_; ++c2)
                    m(r * other.rows_ + r2, c * other.cols_ + c2) = (*this)(r, c) * other(r2, c2);
    return m;
}

Cyclotomic Matrix::trace() const {
    if (!is_square()) throw DomainError("trace of non-square matrix");
    Cyclotomic t;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw DomainError("inverse of non-square matrix");
    int n = rows_;
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = Cyclotomic(1);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw DomainError("matrix is singular");
    }
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

Matrix Matrix::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

int Matrix::rank() const {
    Matrix copy = *this;
    return static_cast<int>(rref(copy).size());
}

Matrix Matrix::nullspace() const {
    Matrix reduced = *this;
    auto pivots = rref(reduced);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(cols_, static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        basis(fc, static_cast<int>(j)) = Cyclotomic(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            basis(pivots[i], static_cast<int>(j)) = -reduced(static_cast<int>(i), fc);
        }
    }
    return basis;
}

ExactPolynomial Matrix::reverse_charpoly() const {
    if (!is_square()) throw DomainError("characteristic polynomial of non-square matrix");
    // Faddeev-LeVerrier: c[k] is the coefficient of T^k in det(1 - A T)
    int n = rows_;
    std::vector<Cyclotomic> c(n + 1);
    c[0] = Cyclotomic(1);
    Matrix mk(n, n);
    for (int k = 1; k <= n; ++k) {
        mk = *this * mk + identity(n) * c[k - 1];
        c[k] = -((*this * mk).trace()) / Cyclotomic(k);
    }
    return ExactPolynomial(std::move(c));
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
    Matrix m(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m(r, static_cast<int>(j)) = (*this)(r, cols[j]);
    return m;
}

Matrix Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw DomainError("solve: shape mismatch");
    Matrix aug(rows_, cols_ + b.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        for (int c = 0; c < b.cols_; ++c) aug(r, cols_ + c) = b(r, c);
    }
    auto pivots = rref(aug);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= cols_) throw DomainError("solve: right-hand side outside the column span");
    }
    if (static_cast<int>(pivots.size()) < cols_) throw DomainError("solve: columns are dependent");
    Matrix x(cols_, b.cols_);
    for (int r = 0; r < cols_; ++r)
        for (int c = 0; c < b.cols_; ++c) x(r, c) = aug(r, cols_ + c);
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace weilrep
