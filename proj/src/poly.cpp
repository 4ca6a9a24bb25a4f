#include "charvar/poly.hpp"

#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i; // always exact at this point
    }
    return out;
}

Int factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    Int out = 1;
    for (long i = 2; i <= n; ++i) out *= i;
    return out;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Int c, long degree) {
    if (degree < 0) throw DomainError("monomial degree must be >= 0");
    std::vector<Int> v(std::size_t(degree) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPolynomial::coeff(long k) const {
    if (k < 0 || k >= long(coeffs_.size())) return 0;
    return coeffs_[std::size_t(k)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    std::vector<Int> out = coeffs_;
    for (auto& x : out) x *= c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(long e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    IntPolynomial acc = constant(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntPolynomial IntPolynomial::shifted(long by) const {
    if (is_zero()) return {};
    if (by < 0) throw DomainError("negative shift");
    std::vector<Int> out(std::size_t(by), 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return {};
    std::vector<Int> rem = coeffs_;
    long dq = degree() - divisor.degree();
    if (dq < 0) throw InternalError("inexact polynomial division: degree too small");
    std::vector<Int> quot(std::size_t(dq) + 1);
    const Int& lead = divisor.coeffs_.back();
    for (long d = dq; d >= 0; --d) {
        Int top = rem[std::size_t(d) + divisor.degree()];
        if (top == 0) continue;
        if (top % lead != 0) throw InternalError("inexact polynomial division: leading term");
        Int q = top / lead;
        quot[std::size_t(d)] = q;
        for (long i = 0; i <= divisor.degree(); ++i)
            rem[std::size_t(d + i)] -= q * divisor.coeffs_[std::size_t(i)];
    }
    for (const auto& c : rem)
        if (c != 0) throw InternalError("inexact polynomial division: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::divide_exact(const Int& c) const {
    if (c == 0) throw DomainError("division by zero");
    std::vector<Int> out = coeffs_;
    for (auto& x : out) {
        if (x % c != 0) throw InternalError("inexact scalar division of a polynomial");
        x /= c;
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = 0; k <= degree(); ++k) {
        const Int& c = coeffs_[std::size_t(k)];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a;
        } else {
            if (a != 1) out << a;
            out << "t";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace charvar
