#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "fusion/polynomial.hpp"

// Exact scalars inside Eigen containers. Precision-related traits are zero:
// nothing here is approximate.
namespace Eigen {

template <>
struct NumTraits<fusion::Rational> : GenericNumTraits<fusion::Rational> {
    using Real = fusion::Rational;
    using NonInteger = fusion::Rational;
    using Nested = fusion::Rational;
    using Literal = fusion::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 40
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<fusion::RationalFunction> : GenericNumTraits<fusion::RationalFunction> {
    using Real = fusion::RationalFunction;
    using NonInteger = fusion::RationalFunction;
    using Nested = fusion::RationalFunction;
    using Literal = fusion::RationalFunction;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 200,
        MulCost = 400
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace fusion {

template <class S>
using SparseOp = Eigen::SparseMatrix<S>;
using SparseOperator = SparseOp<Rational>;
using DenseQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
void drop_zeros(SparseOp<S>& a) {
    a.prune([](const Eigen::Index&, const Eigen::Index&, const S& v) { return !is_zero(v); });
}

template <class S>
SparseOp<S> pruned(SparseOp<S> a) {
    drop_zeros(a);
    return a;
}

template <class S>
bool is_zero_op(const SparseOp<S>& a) {
    for (Eigen::Index k = 0; k < a.outerSize(); ++k)
        for (typename SparseOp<S>::InnerIterator it(a, k); it; ++it)
            if (!is_zero(it.value())) return false;
    return true;
}

template <class S>
bool equal_op(const SparseOp<S>& a, const SparseOp<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero_op(SparseOp<S>(a - b));
}

template <class S>
SparseOp<S> identity_op(Eigen::Index dim) {
    SparseOp<S> id(dim, dim);
    id.setIdentity();
    return id;
}

template <class S>
SparseOp<S> scaled(const SparseOp<S>& a, const S& s) {
    SparseOp<S> out = a;
    for (Eigen::Index k = 0; k < out.outerSize(); ++k)
        for (typename SparseOp<S>::InnerIterator it(out, k); it; ++it) it.valueRef() = it.value() * s;
    drop_zeros(out);
    return out;
}

template <class S>
SparseOp<S> product(const SparseOp<S>& a, const SparseOp<S>& b) {
    SparseOp<S> out = a * b;
    drop_zeros(out);
    return out;
}

// Entrywise map to another scalar type.
template <class D, class S, class F>
SparseOp<D> map_entries(const SparseOp<S>& a, F&& f) {
    std::vector<Eigen::Triplet<D>> trip;
    trip.reserve(a.nonZeros());
    for (Eigen::Index k = 0; k < a.outerSize(); ++k)
        for (typename SparseOp<S>::InnerIterator it(a, k); it; ++it) {
            D v = f(it.value());
            if (!is_zero(v)) trip.emplace_back(it.row(), it.col(), v);
        }
    SparseOp<D> out(a.rows(), a.cols());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

}  // namespace fusion
