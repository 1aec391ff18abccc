#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquiv {

// Arbitrary-precision integer scalar. All rank computations in this library
// are exact; fixed-width overflow is never acceptable, because fraction-free
// elimination produces intermediate values as large as the matrix minors.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/*
 * Minimal dense row-major matrix templated on the scalar type.
 *
 * This is storage plus the handful of block/transpose/product helpers the
 * library needs; all nontrivial algorithms live in free functions (see
 * exact_linalg.hpp). Indices are 0-based here; the 1-based conventions of
 * northwest rank tables are confined to RankTable.
 */
template <typename Scalar>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        Matrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("matrix rows must all have the same length");
            int j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    // Copy of the rectangular block with upper-left corner (i0, j0).
    Matrix block(int i0, int j0, int nrows, int ncols) const {
        Matrix out(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
        return out;
    }

    void set_block(int i0, int j0, const Matrix& src) {
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j) (*this)(i0 + i, j0 + j) = src(i, j);
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(i, j) = -(*this)(i, j);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

using IntMatrix = Matrix<Int>;

template <typename Scalar>
bool is_symmetric(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

template <typename Scalar>
bool is_skew_symmetric(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 0) return false;
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    }
    return true;
}

// M = eps * M^t, the defining symmetry of the signed representation spaces.
template <typename Scalar>
bool is_eps_symmetric(const Matrix<Scalar>& m, int eps) {
    return eps == 1 ? is_symmetric(m) : is_skew_symmetric(m);
}

}  // namespace symquiv
