#include "fusion/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace fusion {

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::order_at_zero() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) os << c_[k];
        else {
            if (!c_[k].is_one()) os << c_[k] << "*";
            os << "e";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(inverse(lead()));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(a.degree() - b.degree() + 1);
    const Rational inv_lead = inverse(b.lead());
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[k + b.degree()] * inv_lead;
        if (q.is_zero()) continue;
        quo[k] = q;
        for (size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    if (!den_.lead().is_one()) {
        Rational s = inverse(den_.lead());
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

Rational RationalFunction::eval_at_zero() const {
    Rational d = den_.at_zero();
    if (d.is_zero()) throw PoleAtLimit("pole at eps = 0: " + str());
    return num_.at_zero() / d;
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw SampleAtPole("sample " + x.str() + " is a pole of " + str());
    return num_.eval(x) / d;
}

std::vector<Rational> RationalFunction::taylor(int terms) const {
    const Rational d0 = den_.at_zero();
    if (d0.is_zero()) throw PoleAtLimit("pole at eps = 0: " + str());
    const Rational inv0 = inverse(d0);
    std::vector<Rational> out(terms);
    // num = den * out, solved term by term
    for (int k = 0; k < terms; ++k) {
        Rational acc = num_.coeff(k);
        for (int j = 1; j <= k && j <= den_.degree(); ++j) acc -= den_.coeff(j) * out[k - j];
        out[k] = acc * inv0;
    }
    return out;
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) num_ = num_ + o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

RationalFunction inverse(const RationalFunction& f) { return RationalFunction(1) / f; }

}  // namespace fusion
