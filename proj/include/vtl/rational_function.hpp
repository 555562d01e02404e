#pragma once

#include "vtl/polynomial.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace vtl {

// Evaluation at a root of the denominator. context, when nonempty, names the
// value being evaluated (for instance the term of an element).
class PoleError : public std::domain_error {
public:
    PoleError(std::string factor, const BigRational& point, const std::string& context = "")
        : std::domain_error((context.empty() ? std::string("pole") : "pole in " + context) +
                            ": denominator " + factor + " vanishes at d = " + point.str()),
          factor_(std::move(factor)),
          point_(point) {}

    const std::string& factor() const { return factor_; }
    const BigRational& point() const { return point_; }

private:
    std::string factor_;
    BigRational point_;
};

// Quotient of polynomials in d, kept normalized: gcd(num, den) = 1,
// den monic, and zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const BigRational& constant) : num_(constant), den_(1) {}
    RationalFunction(long constant) : num_(constant), den_(1) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);  // throws on zero den

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);  // throws on zero divisor

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RationalFunction pow(unsigned long e) const;
    RationalFunction inverse() const;  // throws on zero

    // Exact evaluation; throws PoleError when the denominator vanishes at v.
    BigRational eval(const BigRational& v) const;

    // Equivalent fraction with coprime integer coefficients and positive
    // leading denominator coefficient; used for serialization and display.
    std::pair<Polynomial, Polynomial> integer_pair() const;

    std::string str() const;

private:
    void normalize();
    Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

// Display form that peels integer content and integer linear factors off a
// polynomial, e.g. 3d^2 + 18d + 24 renders as "3(d + 2)(d + 4)".
std::string factored_str(const Polynomial& p);

}  // namespace vtl
