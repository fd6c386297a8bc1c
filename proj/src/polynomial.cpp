#include <gridlock/polynomial.hpp>

#include <gridlock/error.hpp>

#include <sstream>
#include <utility>

namespace gridlock {

namespace {

const BigInt k_zero = 0;

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
    if (degree < 0) raise(ErrorKind::InvalidArgument, "monomial degree must be nonnegative");
    IntPolynomial p;
    if (coefficient != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
        p.coeffs_.back() = std::move(coefficient);
    }
    return p;
}

const BigInt& IntPolynomial::coefficient(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return k_zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) return k_zero;
    return coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& k) const {
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        value = value * k + *it;
    }
    return value;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial result(*this);
    for (auto& c : result.coeffs_) c = -c;
    return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        BigInt magnitude = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (magnitude != 1 || i == 0) out << magnitude.str();
        if (i >= 1) {
            out << "k";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }

IntPolynomial scale(const BigInt& c, const IntPolynomial& p) { return c * p; }

IntPolynomial falling_factorial(int m) {
    if (m < 0) raise(ErrorKind::InvalidArgument, "falling factorial requires m >= 0");
    IntPolynomial product = IntPolynomial::constant(1);
    for (int i = 0; i < m; ++i) {
        // multiply by (k - i)
        product *= IntPolynomial({BigInt(-i), BigInt(1)});
    }
    return product;
}

} // namespace gridlock
