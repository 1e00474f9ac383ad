#pragma once

#include <initializer_list>
#include <vector>

#include "latchroma/errors.hpp"
#include "latchroma/rational.hpp"

namespace latchroma {

// Small dense row-major matrix. Everything here is exact arithmetic on
// boost rationals / integers; sizes stay tiny (n <= 24, ambient <= 96).
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        d_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw Error(ErrorCode::BadInput, "ragged matrix initializer");
            for (const auto& x : row) d_.push_back(x);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return d_.empty(); }

    T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(d_.begin() + static_cast<size_t>(i) * cols_,
                              d_.begin() + static_cast<size_t>(i + 1) * cols_);
    }
    void set_row(int i, const std::vector<T>& r) {
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "mat_mul shape");
    Mat<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> vec_mat(const std::vector<T>& v, const Mat<T>& m) {
    if (static_cast<int>(v.size()) != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "vec_mat shape");
    std::vector<T> out(m.cols(), T(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
    Mat<T> t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Gaussian elimination over the rationals.
Rat det(const QMat& a);
int rank(const QMat& a);
QMat inverse(const QMat& a); // throws SingularSublattice if singular

Int det_int(const IMat& a); // Bareiss, exact

QMat to_rational(const IMat& a);
// Throws BadInput unless every entry is an integer.
IMat to_integer(const QMat& a);

} // namespace latchroma
