#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "lapspec/errors.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

/// Dense square matrix, row-major. Instantiated with double for floating
/// work, Rat for the exact-arithmetic paths, and std::complex<double> for
/// shifted solves inside the eigensolver.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(int n, const T& value = T(0))
        : n_(n), a_(static_cast<std::size_t>(n) * n, value) {
        if (n < 0) throw BadIndexError("matrix order must be nonnegative");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int order() const { return n_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<T>& data() { return a_; }
    const std::vector<T>& data() const { return a_; }

    SquareMatrix& operator+=(const SquareMatrix& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    SquareMatrix& operator-=(const SquareMatrix& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    SquareMatrix& operator*=(const T& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
    friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.require_same_order(b);
        const int n = a.n_;
        SquareMatrix c(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const T aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(n_, T(0));
        for (int i = 0; i < n_; ++i) {
            T s(0);
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    T trace() const {
        T s(0);
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    SquareMatrix transposed() const {
        SquareMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    void require_same_order(const SquareMatrix& o) const {
        if (n_ != o.n_) throw BadIndexError("matrix order mismatch");
    }

    int n_ = 0;
    std::vector<T> a_;
};

using DenseMatrix = SquareMatrix<double>;
using RationalMatrix = SquareMatrix<Rat>;
using ComplexMatrix = SquareMatrix<std::complex<double>>;

inline double frobenius_norm(const DenseMatrix& m) {
    double s = 0;
    for (double v : m.data()) s += v * v;
    return std::sqrt(s);
}

/// Maximum absolute row sum.
inline double inf_norm(const DenseMatrix& m) {
    double best = 0;
    for (int i = 0; i < m.order(); ++i) {
        double s = 0;
        for (int j = 0; j < m.order(); ++j) s += std::fabs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double best = 0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        best = std::max(best, std::fabs(a.data()[i] - b.data()[i]));
    return best;
}

inline DenseMatrix to_double_matrix(const RationalMatrix& m) {
    DenseMatrix d(m.order());
    for (std::size_t i = 0; i < m.data().size(); ++i) d.data()[i] = to_double(m.data()[i]);
    return d;
}

inline RationalMatrix to_rational_matrix(const DenseMatrix& m) {
    RationalMatrix r(m.order());
    for (std::size_t i = 0; i < m.data().size(); ++i) r.data()[i] = rational_from_double(m.data()[i]);
    return r;
}

} // namespace lapspec
