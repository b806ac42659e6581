#include "fusion/tensor.hpp"

#include <cstdlib>
#include <string>

namespace fusion {

BilinearForm BilinearForm::symmetric(int N) {
    DenseQ g = DenseQ::Zero(N, N);
    for (int i = 0; i < N; ++i) g(i, i) = Rational(1);
    return {FormKind::Symmetric, N, g};
}

BilinearForm BilinearForm::alternating(int N) {
    if (N % 2 != 0) throw ParityError("alternating form needs even N, got " + std::to_string(N));
    DenseQ g = DenseQ::Zero(N, N);
    for (int k = 0; k + 1 < N; k += 2) {
        g(k, k + 1) = Rational(1);
        g(k + 1, k) = Rational(-1);
    }
    return {FormKind::Alternating, N, g};
}

BilinearForm BilinearForm::standard(FormKind kind, int N) {
    return kind == FormKind::Symmetric ? symmetric(N) : alternating(N);
}

BilinearForm BilinearForm::from_gram(FormKind kind, DenseQ gram) {
    if (gram.rows() != gram.cols()) throw SingularForm("Gram matrix must be square");
    const int N = static_cast<int>(gram.rows());
    if (kind == FormKind::Alternating && N % 2 != 0) throw ParityError("alternating form needs even N");
    const Rational s(kind == FormKind::Symmetric ? 1 : -1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (!(gram(j, i) == s * gram(i, j))) throw SingularForm("Gram matrix has the wrong symmetry");
    inverse(gram);
    return {kind, N, std::move(gram)};
}

DenseQ inverse(const DenseQ& a) {
    const Eigen::Index n = a.rows();
    DenseQ m = a;
    DenseQ inv = DenseQ::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw SingularForm("matrix is singular");
        m.row(c).swap(m.row(p));
        inv.row(c).swap(inv.row(p));
        Rational piv = fusion::inverse(m(c, c));
        for (Eigen::Index j = 0; j < n; ++j) {
            m(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            Rational f = m(r, c);
            for (Eigen::Index j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Rational>> dual_basis(const BilinearForm& form) {
    // <e_i, v> = sum_b G_ib v_b, so the v_j are the columns of G^{-1}.
    DenseQ v = inverse(form.gram);
    std::vector<std::vector<Rational>> out(form.N, std::vector<Rational>(form.N));
    for (int j = 0; j < form.N; ++j)
        for (int b = 0; b < form.N; ++b) out[j][b] = v(b, j);
    return out;
}

long tensor_dim(int N, int n) {
    long d = 1;
    for (int k = 0; k < n; ++k) d *= N;
    return d;
}

long encode(const std::vector<int>& idx, int N) {
    long r = 0;
    for (int i : idx) r = r * N + (i - 1);
    return r;
}

std::vector<int> decode(long row, int N, int n) {
    std::vector<int> idx(n);
    for (int k = n - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(row % N) + 1;
        row /= N;
    }
    return idx;
}

SparseOperator perm_op(const Permutation& s, int N) {
    return act(GroupElementQ(s), N);
}

SparseOperator p_op(int k, int l, int N, int n) {
    if (k < 1 || l < 1 || k > n || l > n || k == l) throw IndexError("bad slot pair for P");
    return perm_op(Permutation::transposition(n, k, l), N);
}

SparseOperator q_op(int k, int l, const BilinearForm& form, int n) {
    if (k < 1 || l < 1 || k > n || l > n || k == l) throw IndexError("bad slot pair for Q");
    const int N = form.N;
    auto v = dual_basis(form);
    // w = sum_a e_a (x) v_a; Q(e_c (x) e_d) = <e_c, e_d> w.
    std::vector<std::tuple<int, int, Rational>> w;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            if (!v[a - 1][b - 1].is_zero()) w.emplace_back(a, b, v[a - 1][b - 1]);
    const long dim = tensor_dim(N, n);
    std::vector<Eigen::Triplet<Rational>> trip;
    for (long col = 0; col < dim; ++col) {
        std::vector<int> idx = decode(col, N, n);
        Rational g = form(idx[k - 1], idx[l - 1]);
        if (g.is_zero()) continue;
        for (const auto& [a, b, c] : w) {
            idx[k - 1] = a;
            idx[l - 1] = b;
            trip.emplace_back(encode(idx, N), col, g * c);
        }
    }
    SparseOperator op(dim, dim);
    op.setFromTriplets(trip.begin(), trip.end());
    return op;
}

SparseOperator lift(const SparseOperator& a, int N) {
    return kron(identity_op<Rational>(N), a);
}

long max_dim() {
    if (const char* env = std::getenv("FUSION_MAX_DIM")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 4096;
}

void check_size(int N, int n) {
    if (tensor_dim(N, n) > max_dim())
        throw SizeLimitExceeded("N^n = " + std::to_string(tensor_dim(N, n)) + " exceeds FUSION_MAX_DIM = " +
                                std::to_string(max_dim()));
}

}  // namespace fusion
