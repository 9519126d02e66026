#pragma once

#include <complex>
#include <vector>

#include "lapspec/errors.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

/// Univariate polynomial with coefficients in ascending degree order.
/// T is double for floating work and Rat for the exact identities.
template <typename T>
class Polynomial {
public:
    Polynomial() : coeffs_(1, T(0)) {}
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(T(0));
        normalize();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
    /// The monomial x.
    static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    const std::vector<T>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == T(0); }
    int degree() const { return is_zero() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

    T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    template <typename U>
    U eval(const U& x) const {
        U acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + U(coeffs_[i]);
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Multiply by x^k (degree shift).
    Polynomial shifted(int k) const {
        if (is_zero()) return zero();
        std::vector<T> c(coeffs_.size() + k, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
        return Polynomial(std::move(c));
    }

    /// Substitute x -> a*x + b.
    Polynomial compose_affine(const T& a, const T& b) const {
        Polynomial result = constant(coeffs_.back());
        const Polynomial lin(std::vector<T>{b, a});
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
            result = result * lin + constant(coeffs_[i]);
        }
        return result;
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root 0. Exact when T == Rat.
    int root_multiplicity_at_zero() const {
        if (is_zero()) return degree();
        int k = 0;
        while (k < static_cast<int>(coeffs_.size()) && coeffs_[k] == T(0)) ++k;
        return k;
    }

    /// Multiplicity of r as a root, by repeated exact synthetic division.
    int root_multiplicity(const T& r) const {
        Polynomial p = *this;
        if (p.is_zero()) return 0;
        int mult = 0;
        while (p.degree() >= 1 && p.eval(r) == T(0)) {
            p = p.divide_by_linear(r);
            ++mult;
        }
        return mult;
    }

    /// Synthetic division by (x - r); requires that r is a root.
    Polynomial divide_by_linear(const T& r) const {
        const int d = degree();
        std::vector<T> q(static_cast<std::size_t>(d), T(0));
        T carry = coeffs_[static_cast<std::size_t>(d)];
        for (int i = d - 1; i >= 0; --i) {
            q[static_cast<std::size_t>(i)] = carry;
            carry = coeffs_[static_cast<std::size_t>(i)] + carry * r;
        }
        return Polynomial(std::move(q));
    }

private:
    void normalize() {
        while (coeffs_.size() > 1 && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

} // namespace lapspec
