#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fusion {

// One-line notation on {1..n}: img[i-1] = s(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    // k -> n+1-k
    static Permutation reversal(int n);
    // Cycle notation such as "(1 3)(2 4)"; "()" or "" is the identity.
    static Permutation parse_cycles(int n, std::string_view s);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;
    int sign() const;
    Permutation inverse() const;
    // s(k) <= m for all k <= m
    bool preserves_prefix(int m) const;
    // The permutation of {1..n} fixing 1..m and acting as *this shifted by m.
    Permutation shifted(int m) const;
    std::string cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : img_(std::move(images)) {}
    friend Permutation compose(const Permutation&, const Permutation&);
    std::vector<int> img_;
};

// (s o t)(i) = s(t(i)): the right factor acts first.
Permutation compose(const Permutation& s, const Permutation& t);
inline Permutation operator*(const Permutation& s, const Permutation& t) { return compose(s, t); }

std::vector<Permutation> all_permutations(int n);

}  // namespace fusion
