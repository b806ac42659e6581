#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "fusion/tensor.hpp"

namespace fusion {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<long, Rational>>;
using IntRow = std::vector<std::pair<long, mpz_class>>;

struct SubspaceBasis {
    long ambient = 0;
    std::vector<SparseVector> vectors;

    long dim() const { return static_cast<long>(vectors.size()); }
};

// Fraction-free row echelon form over the integers. Each stored row is
// primitive and keyed by its leading index.
class Echelon {
public:
    explicit Echelon(long ambient) : ambient_(ambient) {}

    long ambient() const { return ambient_; }
    long rank() const { return static_cast<long>(rows_.size()); }
    const std::map<long, IntRow>& rows() const { return rows_; }

    // Clears leading entries against stored pivots; zero iff r is in the span.
    IntRow reduce(IntRow r) const;
    // Returns true when r was independent of the stored rows.
    bool insert(IntRow r);
    bool insert(const SparseVector& v);
    bool contains(const SparseVector& v) const;

    // Rows in reduced echelon form, ascending pivots.
    std::vector<IntRow> reduced() const;
    SubspaceBasis basis() const;

private:
    long ambient_;
    std::map<long, IntRow> rows_;
};

IntRow to_int_row(const SparseVector& v);
SparseVector to_sparse_vector(const IntRow& r);
SparseVector apply_op(const SparseOperator& a, const SparseVector& v);
SparseVector unit_vector(long i);

long rank(const SparseOperator& a);
SubspaceBasis image_basis(const SparseOperator& a);
SubspaceBasis kernel_basis(const SparseOperator& a);
// Common kernel of several operators with the same column space.
SubspaceBasis kernel_basis(const std::vector<SparseOperator>& ops);
SubspaceBasis traceless_basis(int N, int n, const BilinearForm& form);

SubspaceBasis span_of(long ambient, const std::vector<SparseVector>& vs);
// Span of a·v over the basis vectors v.
SubspaceBasis image_of(const SparseOperator& a, const SubspaceBasis& b);
bool contains(const SubspaceBasis& b, const SparseVector& v);
// Both throw AmbientMismatch.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace fusion
