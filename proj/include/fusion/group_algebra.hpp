#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "fusion/errors.hpp"
#include "fusion/permutation.hpp"
#include "fusion/polynomial.hpp"

namespace fusion {

// Finite combination sum_s c_s * s in the group algebra of S_n. Coefficients
// are Rational or RationalFunction; zero coefficients are never stored.
template <class C>
class GroupAlgebraElement {
public:
    using Terms = std::map<Permutation, C>;

    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(int n) : n_(n) {}
    GroupAlgebraElement(const Permutation& s, C c = C(1)) : n_(s.degree()) { add(s, std::move(c)); }
    static GroupAlgebraElement one(int n) { return GroupAlgebraElement(Permutation::identity(n)); }

    int degree() const { return n_; }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Permutation& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add(const Permutation& s, const C& c) {
        if (s.degree() != n_) throw DegreeMismatch("term of wrong degree");
        if (is_zero_coeff(c)) return;
        auto [it, fresh] = terms_.try_emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        check(o);
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        check(o);
        for (const auto& [s, c] : o.terms_) add(s, -c);
        return *this;
    }
    GroupAlgebraElement& operator*=(const C& c) {
        if (is_zero_coeff(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, v] : terms_) v *= c;
        return *this;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const C& c) { return a *= c; }
    friend GroupAlgebraElement operator*(const C& c, GroupAlgebraElement a) { return a *= c; }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        a.check(b);
        GroupAlgebraElement out(a.n_);
        for (const auto& [s, x] : a.terms_)
            for (const auto& [t, y] : b.terms_) out.add(compose(s, t), x * y);
        return out;
    }

    // this * t for a single permutation t.
    GroupAlgebraElement times(const Permutation& t) const {
        GroupAlgebraElement out(n_);
        for (const auto& [s, x] : terms_) out.terms_.emplace(compose(s, t), x);
        return out;
    }
    // t * this
    GroupAlgebraElement times_left(const Permutation& t) const {
        GroupAlgebraElement out(n_);
        for (const auto& [s, x] : terms_) out.terms_.emplace(compose(t, s), x);
        return out;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    template <class D, class F>
    GroupAlgebraElement<D> map(F&& f) const {
        GroupAlgebraElement<D> out(n_);
        for (const auto& [s, c] : terms_) out.add(s, f(c));
        return out;
    }

    // Keep the terms satisfying pred.
    GroupAlgebraElement filter(const std::function<bool(const Permutation&)>& pred) const {
        GroupAlgebraElement out(n_);
        for (const auto& [s, c] : terms_)
            if (pred(s)) out.terms_.emplace(s, c);
        return out;
    }

    // iota_m: the copy acting on {m+1..m+n} inside S_{m+n}.
    GroupAlgebraElement shifted(int m) const {
        GroupAlgebraElement out(n_ + m);
        for (const auto& [s, c] : terms_) out.terms_.emplace(s.shifted(m), c);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c) + ")" + s.cycles();
        }
        return out;
    }

private:
    static bool is_zero_coeff(const C& c) { return fusion::is_zero(c); }
    void check(const GroupAlgebraElement& o) const {
        if (o.n_ != n_) throw DegreeMismatch("group algebra elements of different degree");
    }

    int n_ = 0;
    Terms terms_;
};

using GroupElementQ = GroupAlgebraElement<Rational>;
using GroupElementRF = GroupAlgebraElement<RationalFunction>;

}  // namespace fusion
