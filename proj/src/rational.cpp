#include "fusion/rational.hpp"

#include <cctype>
#include <ostream>

namespace fusion {

Rational::Rational(long p, long q) {
    if (q == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(p, q);
    v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_int(std::string_view s) {
    if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    std::string t(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(t, 10);
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    mpz_class p = parse_int(s.substr(0, slash));
    mpz_class q = parse_int(s.substr(slash + 1));
    if (q == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(mpq_class(p, q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& r, int e) {
    Rational base = e < 0 ? inverse(r) : r;
    Rational out(1);
    for (int k = e < 0 ? -e : e; k > 0; --k) out *= base;
    return out;
}

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fusion
