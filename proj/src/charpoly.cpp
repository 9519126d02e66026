#include "lapspec/charpoly.hpp"

#include <bit>
#include <string>
#include <vector>

#include "lapspec/errors.hpp"

namespace lapspec {

Polynomial<double> char_poly(const DenseMatrix& m) {
    const int n = m.order();
    if (n > 64)
        throw OverflowError("float characteristic polynomial is limited to order 64; use the exact mode");

    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    DenseMatrix aux = DenseMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        const DenseMatrix mk = m * aux;
        const double ck = -mk.trace() / k;
        c[static_cast<std::size_t>(n - k)] = ck;
        aux = mk;
        for (int i = 0; i < n; ++i) aux(i, i) += ck;
    }
    return Polynomial<double>(std::move(c));
}

Polynomial<Rat> char_poly_exact(const RationalMatrix& m, unsigned max_bits) {
    const int n = m.order();
    using boost::multiprecision::lcm;

    // Clear denominators: with M = B / d, the coefficients satisfy
    // c_j(M) = c_j(B) / d^(n-j), so the whole recurrence can run over the
    // integers, where Faddeev-LeVerrier's trace divisions are exact.
    Int d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d = lcm(d, boost::multiprecision::denominator(m(i, j)));

    SquareMatrix<Int> b(n);
    unsigned entry_bits = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rat& e = m(i, j);
            b(i, j) = boost::multiprecision::numerator(e) * (d / boost::multiprecision::denominator(e));
            if (b(i, j) != 0) {
                const Int magnitude = abs(b(i, j));
                entry_bits = std::max(entry_bits, static_cast<unsigned>(msb(magnitude)) + 1u);
            }
        }
    }

    // Coefficient k of det(lambda I - B) is a sum of k x k minors: at most
    // n! / ((n-k)! k!) * k! <= n^k terms of at most k * entry_bits bits each.
    const unsigned log_n = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(n)));
    const unsigned predicted = static_cast<unsigned>(n) * (entry_bits + log_n + 1);
    if (predicted > max_bits)
        throw OverflowError("exact characteristic polynomial of order " + std::to_string(n) +
                            " needs about " + std::to_string(predicted) +
                            " bits, beyond the configured budget of " + std::to_string(max_bits));

    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c[static_cast<std::size_t>(n)] = 1;
    SquareMatrix<Int> aux = SquareMatrix<Int>::identity(n);
    for (int k = 1; k <= n; ++k) {
        const SquareMatrix<Int> mk = b * aux;
        Int quotient;
        Int remainder;
        const Int neg_trace = -mk.trace();
        divide_qr(neg_trace, Int(k), quotient, remainder);
        if (remainder != 0)
            throw InvariantViolationError("Faddeev-LeVerrier trace division left a remainder");
        c[static_cast<std::size_t>(n - k)] = quotient;
        aux = mk;
        for (int i = 0; i < n; ++i) aux(i, i) += quotient;
    }

    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
    Int power = 1;  // d^(n-j), built from j = n downward
    for (int j = n; j >= 0; --j) {
        coeffs[static_cast<std::size_t>(j)] = Rat(c[static_cast<std::size_t>(j)], power);
        power *= d;
    }
    return Polynomial<Rat>(std::move(coeffs));
}

} // namespace lapspec
