#pragma once
#include <string>
#include <vector>

#include "charvar/bigint.hpp"

namespace charvar {

/* Dense integer polynomial in one variable t.  Canonical form: no trailing
 * zero coefficients; the zero polynomial has an empty coefficient list and
 * degree() == -1. */
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(Int c, long degree);

    long degree() const { return long(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(long k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const = default;

    IntPolynomial pow(long e) const;
    IntPolynomial shifted(long by) const; // multiply by t^by

    /* Throws InternalError unless the division is exact. */
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;
    IntPolynomial divide_exact(const Int& c) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

} // namespace charvar
