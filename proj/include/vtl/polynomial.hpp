#pragma once

#include "vtl/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace vtl {

// Univariate polynomial in the loop parameter d over BigRational.
// Coefficients are stored densely in ascending degree; the zero polynomial
// is the empty vector and a nonzero polynomial has a nonzero last entry.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const BigRational& constant);
    Polynomial(long constant) : Polynomial(BigRational(constant)) {}
    explicit Polynomial(std::vector<BigRational> coeffs);

    static Polynomial variable();                                  // d
    static Polynomial monomial(const BigRational& c, std::size_t k);
    static Polynomial linear(const BigRational& c0, const BigRational& c1);  // c1*d + c0

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coeff(std::size_t k) const;
    const BigRational& leading() const;  // throws std::domain_error on zero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
    friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Total order for use as a map key: degree first, then coefficients from
    // the top down. Not a divisibility or magnitude order.
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    BigRational eval(const BigRational& v) const;

    Polynomial monic() const;  // throws std::domain_error on zero

    // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static void divrem(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

    // Scales by the lcm of coefficient denominators over the gcd of numerators,
    // so the result has coprime integer coefficients; sign of the leading
    // coefficient is preserved. Zero stays zero.
    Polynomial primitive_integer() const;

    std::string str() const;

private:
    void normalize();
    std::vector<BigRational> coeffs_;
};

// Monic gcd. gcd(0, b) = monic b; gcd(0, 0) throws std::domain_error.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace vtl
