#include "fusion/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size() + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > degree() || seen[v]++) throw ParseError("not a permutation");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw IndexError("bad transposition indices");
    Permutation p = identity(n);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Permutation Permutation::reversal(int n) {
    std::vector<int> v(n);
    for (int k = 1; k <= n; ++k) v[k - 1] = n + 1 - k;
    return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(int n, std::string_view s) {
    Permutation p = identity(n);
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ') { ++i; continue; }
        if (s[i] != '(') throw ParseError("bad cycle notation '" + std::string(s) + "'");
        size_t close = s.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unclosed cycle");
        std::istringstream is(std::string(s.substr(i + 1, close - i - 1)));
        std::vector<int> cyc;
        for (int v; is >> v;) cyc.push_back(v);
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > n || b < 1 || b > n) throw ParseError("cycle entry out of range");
            p.img_[a - 1] = b;
        }
        i = close + 1;
    }
    return Permutation(p.img_);
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

int Permutation::sign() const {
    std::vector<char> seen(degree(), 0);
    int s = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j] - 1) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(degree());
    for (int i = 0; i < degree(); ++i) v[img_[i] - 1] = i + 1;
    return Permutation(std::move(v));
}

bool Permutation::preserves_prefix(int m) const {
    for (int k = 0; k < m; ++k)
        if (img_[k] > m) return false;
    return true;
}

Permutation Permutation::shifted(int m) const {
    std::vector<int> v(degree() + m);
    for (int k = 0; k < m; ++k) v[k] = k + 1;
    for (int k = 0; k < degree(); ++k) v[m + k] = img_[k] + m;
    return Permutation(std::move(v), Unchecked{});
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i + 1) continue;
        out += '(';
        bool first = true;
        for (int j = i; !seen[j]; j = img_[j] - 1) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree()) throw DegreeMismatch("composing permutations of different degree");
    std::vector<int> v(s.degree());
    for (int i = 1; i <= s.degree(); ++i) v[i - 1] = s(t(i));
    return Permutation(std::move(v), Permutation::Unchecked{});
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace fusion
