#include "vtl/rational_function.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace vtl {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_one()) {
        const Polynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            Polynomial q, r;
            Polynomial::divrem(num_, g, q, r);
            num_ = std::move(q);
            Polynomial::divrem(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    if (!den_.leading().is_one()) {
        const BigRational inv = den_.leading().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::pow(unsigned long e) const {
    RationalFunction acc(1);
    for (unsigned long i = 0; i < e; ++i) acc *= *this;
    return acc;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

BigRational RationalFunction::eval(const BigRational& v) const {
    const BigRational dv = den_.eval(v);
    if (dv.is_zero()) throw PoleError(den_.str(), v);
    return num_.eval(v) / dv;
}

std::pair<Polynomial, Polynomial> RationalFunction::integer_pair() const {
    if (is_zero()) return {Polynomial(), Polynomial(1)};
    // Scale both parts by the same factor: lcm of all coefficient
    // denominators over the gcd of all scaled numerators.
    mpz_class den_lcm(1);
    for (const auto& c : num_.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : den_.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd(0);
    auto fold = [&](const Polynomial& p) {
        for (const auto& c : p.coeffs()) {
            mpz_class scaled = c.num() * (den_lcm / c.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    };
    fold(num_);
    fold(den_);
    const BigRational scale(den_lcm, num_gcd);
    Polynomial n = num_, d = den_;
    n *= scale;
    d *= scale;
    return {std::move(n), std::move(d)};
}

namespace {

// True when a factored denominator string is a single atom ("d", "12", or
// one parenthesized group) and can follow "/" without extra parentheses.
bool single_atom(const std::string& s) {
    if (s == "d") return true;
    if (s.find_first_not_of("0123456789") == std::string::npos) return true;
    if (s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0) return i + 1 == s.size();
    }
    return false;
}

}  // namespace

std::string RationalFunction::str() const {
    if (is_zero()) return "0";
    auto [n, d] = integer_pair();
    if (d.is_one()) return n.str();
    std::string ns = n.str();
    if (n.degree() >= 1) ns = "(" + ns + ")";
    const std::string ds = factored_str(d);
    return ns + "/" + (single_atom(ds) ? ds : "(" + ds + ")");
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

std::string factored_str(const Polynomial& p) {
    if (p.is_zero()) return "0";
    Polynomial work = p.primitive_integer();
    const BigRational content = p.leading() / work.leading();
    // Peel monic integer linear factors (d + a) by scanning integer roots of
    // the primitive part; candidates divide the constant term.
    std::vector<mpz_class> shifts;
    while (work.degree() >= 1) {
        if (work.coeff(0).is_zero()) {
            shifts.emplace_back(0);
            Polynomial q, r;
            Polynomial::divrem(work, Polynomial::variable(), q, r);
            work = std::move(q);
            continue;
        }
        const mpz_class c0 = work.coeff(0).num();
        bool found = false;
        mpz_class bound = ::abs(c0);
        for (mpz_class a(1); a <= bound && !found; ++a) {
            if (!mpz_divisible_p(c0.get_mpz_t(), a.get_mpz_t())) continue;
            for (const int s : {1, -1}) {
                const mpz_class shift = s * a;
                if (!work.eval(BigRational(mpz_class(-shift))).is_zero()) continue;
                Polynomial q, r;
                Polynomial::divrem(work, Polynomial::linear(BigRational(shift), BigRational(1)), q, r);
                work = std::move(q);
                shifts.push_back(shift);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    // Fold any residual constant of work into the content.
    BigRational lead = content;
    if (work.degree() == 0) {
        lead *= work.coeff(0);
        work = Polynomial(1);
    }
    std::ostringstream os;
    bool have_atom = false;
    if (lead != BigRational(1) || (shifts.empty() && work.is_one())) {
        os << (lead.is_integer() ? lead.str() : "(" + lead.str() + ")");
        have_atom = true;
    }
    std::sort(shifts.begin(), shifts.end(),
              [](const mpz_class& a, const mpz_class& b) { return a < b; });
    for (const auto& a : shifts) {
        if (a == 0) os << "d";
        else os << "(d " << (a > 0 ? "+ " : "- ") << mpz_class(::abs(a)).get_str() << ")";
        have_atom = true;
    }
    if (!work.is_one()) {
        if (have_atom) os << "(" << work.str() << ")";
        else os << work.str();
    }
    return os.str();
}

}  // namespace vtl
