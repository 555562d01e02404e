#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace vtl {

// Arbitrary-precision rational number.
// Canonical form is maintained at all times: gcd(num, den) = 1 and den > 0.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(int value) : q_(value) {}
    BigRational(long value) : q_(static_cast<signed long>(value)) {}
    BigRational(const mpz_class& value) : q_(value) {}

    BigRational(long num, long den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    BigRational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with an optional sign on either part.
    static BigRational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("BigRational: cannot parse \"" + text + "\"");
        if (q.get_den() == 0)
            throw std::domain_error("BigRational: zero denominator in \"" + text + "\"");
        q.canonicalize();
        return BigRational(std::move(q));
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    BigRational pow(unsigned long e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        mpq_class r(n);
        r /= mpq_class(d);
        return BigRational(std::move(r));
    }

    BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }

    BigRational inverse() const {
        if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
        return BigRational(mpq_class(1) / q_);
    }

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        return is_integer() ? q_.get_num().get_str() : q_.get_str();
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class odd_double_factorial(long m);  // m!! for odd m, 1 for m <= 0

}  // namespace vtl
