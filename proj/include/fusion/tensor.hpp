#pragma once

#include <vector>

#include "fusion/eigen_support.hpp"
#include "fusion/group_algebra.hpp"

namespace fusion {

enum class FormKind { Symmetric, Alternating };

struct BilinearForm {
    FormKind kind;
    int N;
    DenseQ gram;

    // Identity Gram.
    static BilinearForm symmetric(int N);
    // <e_{2k-1}, e_{2k}> = 1; throws ParityError for odd N.
    static BilinearForm alternating(int N);
    static BilinearForm standard(FormKind kind, int N);
    // Checks symmetry type and nondegeneracy; throws SingularForm or
    // ParityError.
    static BilinearForm from_gram(FormKind kind, DenseQ gram);

    Rational operator()(int a, int b) const { return gram(a - 1, b - 1); }
    // +1 symmetric, -1 alternating: the sign in Q P = +-Q.
    int sign() const { return kind == FormKind::Symmetric ? 1 : -1; }
};

// Exact inverse of a square matrix; throws SingularForm.
DenseQ inverse(const DenseQ& a);

// Columns v_j with <e_i, v_j> = delta_ij.
std::vector<std::vector<Rational>> dual_basis(const BilinearForm& form);

// Multi-index (i_1..i_n), entries 1..N, i_1 most significant.
long tensor_dim(int N, int n);
long encode(const std::vector<int>& idx, int N);
std::vector<int> decode(long row, int N, int n);

SparseOperator perm_op(const Permutation& s, int N);
SparseOperator p_op(int k, int l, int N, int n);
SparseOperator q_op(int k, int l, const BilinearForm& form, int n);

template <class C>
SparseOp<C> act(const GroupAlgebraElement<C>& a, int N) {
    const int n = a.degree();
    const long dim = tensor_dim(N, n);
    std::vector<Eigen::Triplet<C>> trip;
    trip.reserve(a.size() * dim);
    std::vector<int> out(n);
    for (long col = 0; col < dim; ++col) {
        std::vector<int> idx = decode(col, N, n);
        for (const auto& [s, c] : a.terms()) {
            for (int k = 1; k <= n; ++k) out[s(k) - 1] = idx[k - 1];
            trip.emplace_back(encode(out, N), col, c);
        }
    }
    SparseOp<C> op(dim, dim);
    op.setFromTriplets(trip.begin(), trip.end());
    drop_zeros(op);
    return op;
}

// a (x) b with a acting on the more significant slots.
template <class S>
SparseOp<S> kron(const SparseOp<S>& a, const SparseOp<S>& b) {
    std::vector<Eigen::Triplet<S>> trip;
    trip.reserve(a.nonZeros() * b.nonZeros());
    for (Eigen::Index i = 0; i < a.outerSize(); ++i)
        for (typename SparseOp<S>::InnerIterator x(a, i); x; ++x)
            for (Eigen::Index j = 0; j < b.outerSize(); ++j)
                for (typename SparseOp<S>::InnerIterator y(b, j); y; ++y)
                    trip.emplace_back(x.row() * b.rows() + y.row(), x.col() * b.cols() + y.col(),
                                      x.value() * y.value());
    SparseOp<S> out(a.rows() * b.rows(), a.cols() * b.cols());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

// 1 (x) a: a acting on slots 2..n+1 of an (n+1)-fold product.
SparseOperator lift(const SparseOperator& a, int N);

// Env var FUSION_MAX_DIM, default 4096.
long max_dim();
// Throws SizeLimitExceeded when N^n exceeds max_dim().
void check_size(int N, int n);

}  // namespace fusion
