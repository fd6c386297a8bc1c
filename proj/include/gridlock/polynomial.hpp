#pragma once

// Exact-integer univariate polynomials in the color count k. Values of the
// LO- and SG-polynomials live here, together with the falling-factorial
// basis used by the set-partition formula.

#include <gridlock/bigint.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gridlock {

class IntPolynomial {
public:
    // The zero polynomial.
    IntPolynomial() = default;

    // Coefficients in ascending powers of k; trailing zeros are trimmed.
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(int degree, BigInt coefficient = 1);

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of k^i; zero beyond the stored degree.
    const BigInt& coefficient(int i) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    const BigInt& leading_coefficient() const;
    const BigInt& constant_term() const { return coefficient(0); }

    BigInt evaluate(const BigInt& k) const;
    BigInt evaluate(std::int64_t k) const { return evaluate(BigInt(k)); }

    // Rendering in descending powers, e.g. "k^5 - 5k^2 + 4k"; zero prints "0".
    std::string to_string() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& scalar);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& scalar) { return lhs *= scalar; }
    friend IntPolynomial operator*(const BigInt& scalar, IntPolynomial rhs) { return rhs *= scalar; }
    friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }

    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const BigInt& c, const IntPolynomial& p);

// k (k-1) (k-2) ... (k-m+1), expanded in the power basis; m = 0 yields 1.
IntPolynomial falling_factorial(int m);

} // namespace gridlock
