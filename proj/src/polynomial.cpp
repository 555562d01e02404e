#include "vtl/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace vtl {

Polynomial::Polynomial(const BigRational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial Polynomial::variable() {
    return monomial(BigRational(1), 1);
}

Polynomial Polynomial::monomial(const BigRational& c, std::size_t k) {
    Polynomial p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(k + 1, BigRational());
    p.coeffs_[k] = c;
    return p;
}

Polynomial Polynomial::linear(const BigRational& c0, const BigRational& c1) {
    return Polynomial(std::vector<BigRational>{c0, c1});
}

bool Polynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

BigRational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational();
}

const BigRational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("Polynomial: leading coefficient of zero");
    return coeffs_.back();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

BigRational Polynomial::eval(const BigRational& v) const {
    BigRational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= v;
        acc += coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("Polynomial: monic of zero");
    Polynomial r(*this);
    const BigRational inv = leading().inverse();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

void Polynomial::divrem(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
    q = Polynomial();
    r = a;
    const int db = b.degree();
    const BigRational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        const BigRational factor = r.leading() * lead_inv;
        q += Polynomial::monomial(factor, shift);
        r -= Polynomial::monomial(factor, shift) * b;
    }
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("Polynomial: gcd(0, 0)");
    Polynomial x = a, y = b, q, r;
    while (!y.is_zero()) {
        Polynomial::divrem(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial Polynomial::primitive_integer() const {
    if (is_zero()) return Polynomial();
    mpz_class den_lcm(1);
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const auto& c : coeffs_) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Polynomial r(*this);
    r *= BigRational(den_lcm, num_gcd);
    return r;
}

namespace {

// Renders one monomial c*d^k, omitting unit coefficients and d^0/d^1 noise.
void append_term(std::ostringstream& os, const BigRational& c, std::size_t k, bool first) {
    BigRational a = c;
    if (first) {
        if (a.sign() < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
    }
    const bool unit = a.is_one() && k > 0;
    if (!unit) {
        if (a.is_integer()) os << a.str();
        else os << "(" << a.str() << ")";
    }
    if (k >= 1) os << "d";
    if (k >= 2) os << "^" << k;
}

}  // namespace

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        append_term(os, coeffs_[i], i, first);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace vtl
