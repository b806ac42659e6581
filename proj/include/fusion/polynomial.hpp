#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fusion/rational.hpp"

namespace fusion {

// Univariate polynomial in eps, coefficients ascending. Zero polynomial has
// no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial eps() { return Polynomial({Rational(0), Rational(1)}); }
    // c0 + c1*eps
    static Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& lead() const { return c_.back(); }
    Rational at_zero() const { return c_.empty() ? Rational(0) : c_[0]; }
    Rational eval(const Rational& x) const;
    // Multiplicity of eps as a factor; -1 for the zero polynomial.
    int order_at_zero() const;
    std::string str() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial scaled(const Rational& s) const;
    Polynomial monic() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; throws DivisionByZero for b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// Reduced quotient num/den with gcd 1 and monic den.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction eps() { return RationalFunction(Polynomial::eps()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Throws PoleAtLimit when den(0) == 0.
    Rational eval_at_zero() const;
    // Throws SampleAtPole when den(x) == 0.
    Rational eval(const Rational& x) const;
    // First `terms` Taylor coefficients at eps = 0; throws PoleAtLimit.
    std::vector<Rational> taylor(int terms) const;
    std::string str() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce();
    Polynomial num_;
    Polynomial den_;
};

RationalFunction inverse(const RationalFunction& f);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const RationalFunction& f) { return f.str(); }

}  // namespace fusion
