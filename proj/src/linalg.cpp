#include "fusion/linalg.hpp"

#include <algorithm>
#include <string>

namespace fusion {

namespace {

void make_primitive(IntRow& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [i, c] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// ca*a + cb*b
IntRow combine(const mpz_class& ca, const IntRow& a, const mpz_class& cb, const IntRow& b) {
    IntRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, ca * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, cb * b[j].second);
            ++j;
        } else {
            mpz_class v = ca * a[i].second + cb * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const mpz_class* entry(const IntRow& r, long idx) {
    auto it = std::lower_bound(r.begin(), r.end(), idx, [](const auto& e, long k) { return e.first < k; });
    return it != r.end() && it->first == idx ? &it->second : nullptr;
}

// Nonzero entries of a, grouped by row.
std::vector<SparseVector> operator_rows(const SparseOperator& a) {
    std::vector<SparseVector> rows(a.rows());
    for (Eigen::Index c = 0; c < a.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(a, c); it; ++it)
            if (!it.value().is_zero()) rows[it.row()].emplace_back(it.col(), it.value());
    return rows;
}

std::vector<SparseVector> operator_columns(const SparseOperator& a) {
    std::vector<SparseVector> cols(a.cols());
    for (Eigen::Index c = 0; c < a.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(a, c); it; ++it)
            if (!it.value().is_zero()) cols[c].emplace_back(it.row(), it.value());
    return cols;
}

SubspaceBasis kernel_from(const Echelon& e) {
    SubspaceBasis out{e.ambient(), {}};
    std::vector<IntRow> rref = e.reduced();
    std::vector<bool> is_pivot(e.ambient(), false);
    for (const auto& r : rref) is_pivot[r.front().first] = true;
    // Column f of the reduced rows, collected once.
    std::vector<std::vector<std::pair<size_t, const mpz_class*>>> by_col(e.ambient());
    for (size_t k = 0; k < rref.size(); ++k)
        for (const auto& [i, c] : rref[k])
            if (!is_pivot[i]) by_col[i].emplace_back(k, &c);
    for (long f = 0; f < e.ambient(); ++f) {
        if (is_pivot[f]) continue;
        SparseVector v;
        for (const auto& [k, c] : by_col[f]) {
            const auto& r = rref[k];
            v.emplace_back(r.front().first, -Rational(mpq_class(*c, r.front().second)));
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        IntRow iv = to_int_row(v);
        make_primitive(iv);
        out.vectors.push_back(to_sparse_vector(iv));
    }
    return out;
}

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient != b.ambient)
        throw AmbientMismatch("subspaces live in dimensions " + std::to_string(a.ambient) + " and " +
                              std::to_string(b.ambient));
}

}  // namespace

IntRow to_int_row(const SparseVector& v) {
    mpz_class l = 1;
    for (const auto& [i, c] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    IntRow r;
    r.reserve(v.size());
    for (const auto& [i, c] : v)
        if (!c.is_zero()) r.emplace_back(i, c.num() * (l / c.den()));
    return r;
}

SparseVector to_sparse_vector(const IntRow& r) {
    SparseVector v;
    v.reserve(r.size());
    for (const auto& [i, c] : r) v.emplace_back(i, Rational(c));
    return v;
}

SparseVector apply_op(const SparseOperator& a, const SparseVector& v) {
    std::map<long, Rational> acc;
    for (const auto& [j, x] : v)
        for (SparseOperator::InnerIterator it(a, j); it; ++it) acc[it.row()] += it.value() * x;
    SparseVector out;
    for (auto& [i, c] : acc)
        if (!c.is_zero()) out.emplace_back(i, std::move(c));
    return out;
}

SparseVector unit_vector(long i) { return {{i, Rational(1)}}; }

IntRow Echelon::reduce(IntRow r) const {
    while (!r.empty()) {
        auto it = rows_.find(r.front().first);
        if (it == rows_.end()) break;
        const IntRow& p = it->second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
        mpz_class ca = p.front().second / g, cb = -(r.front().second / g);
        r = combine(ca, r, cb, p);
        make_primitive(r);
    }
    return r;
}

bool Echelon::insert(IntRow r) {
    make_primitive(r);
    r = reduce(std::move(r));
    if (r.empty()) return false;
    long lead = r.front().first;
    rows_.emplace(lead, std::move(r));
    return true;
}

bool Echelon::insert(const SparseVector& v) { return insert(to_int_row(v)); }

bool Echelon::contains(const SparseVector& v) const {
    IntRow r = to_int_row(v);
    make_primitive(r);
    return reduce(std::move(r)).empty();
}

std::vector<IntRow> Echelon::reduced() const {
    std::vector<IntRow> out;
    for (const auto& [p, r] : rows_) out.push_back(r);
    // Clear pivot columns above each pivot, largest pivot first.
    for (size_t k = out.size(); k-- > 0;) {
        for (size_t j = k + 1; j < out.size(); ++j) {
            const IntRow& q = out[j];
            const mpz_class* c = entry(out[k], q.front().first);
            if (!c) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), q.front().second.get_mpz_t(), c->get_mpz_t());
            mpz_class ca = q.front().second / g, cb = -(*c / g);
            out[k] = combine(ca, out[k], cb, q);
            make_primitive(out[k]);
        }
    }
    return out;
}

SubspaceBasis Echelon::basis() const {
    SubspaceBasis b{ambient_, {}};
    for (const auto& [p, r] : rows_) b.vectors.push_back(to_sparse_vector(r));
    return b;
}

long rank(const SparseOperator& a) {
    Echelon e(a.rows());
    for (const auto& c : operator_columns(a))
        if (!c.empty()) e.insert(c);
    return e.rank();
}

SubspaceBasis image_basis(const SparseOperator& a) {
    Echelon e(a.rows());
    for (const auto& c : operator_columns(a))
        if (!c.empty()) e.insert(c);
    return e.basis();
}

SubspaceBasis kernel_basis(const SparseOperator& a) { return kernel_basis(std::vector<SparseOperator>{a}); }

SubspaceBasis kernel_basis(const std::vector<SparseOperator>& ops) {
    if (ops.empty()) throw AmbientMismatch("kernel of an empty operator list");
    Echelon e(ops.front().cols());
    for (const auto& a : ops) {
        if (a.cols() != e.ambient()) throw AmbientMismatch("operators with different column spaces");
        for (const auto& r : operator_rows(a))
            if (!r.empty()) e.insert(r);
    }
    return kernel_from(e);
}

SubspaceBasis traceless_basis(int N, int n, const BilinearForm& form) {
    if (form.N != N) throw AmbientMismatch("form dimension differs from N");
    const long dim = tensor_dim(N, n);
    if (n < 2) {
        SubspaceBasis b{dim, {}};
        for (long i = 0; i < dim; ++i) b.vectors.push_back(unit_vector(i));
        return b;
    }
    std::vector<SparseOperator> qs;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) qs.push_back(q_op(k, l, form, n));
    return kernel_basis(qs);
}

SubspaceBasis span_of(long ambient, const std::vector<SparseVector>& vs) {
    Echelon e(ambient);
    for (const auto& v : vs)
        if (!v.empty()) e.insert(v);
    return e.basis();
}

SubspaceBasis image_of(const SparseOperator& a, const SubspaceBasis& b) {
    if (a.cols() != b.ambient) throw AmbientMismatch("operator and subspace dimensions differ");
    std::vector<SparseVector> vs;
    for (const auto& v : b.vectors) vs.push_back(apply_op(a, v));
    return span_of(a.rows(), vs);
}

bool contains(const SubspaceBasis& b, const SparseVector& v) {
    Echelon e(b.ambient);
    for (const auto& u : b.vectors) e.insert(u);
    return e.contains(v);
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    Echelon e(a.ambient);
    for (const auto& u : a.vectors) e.insert(u);
    if (e.rank() != span_of(b.ambient, b.vectors).dim()) return false;
    for (const auto& v : b.vectors)
        if (!e.contains(v)) return false;
    return true;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    // Zassenhaus: echelonize rows (u | u) and (w | 0); rows that vanish on the
    // first half carry a basis of the intersection in the second.
    const long d = a.ambient;
    Echelon e(2 * d);
    for (const auto& u : a.vectors) {
        SparseVector row = u;
        for (const auto& [i, c] : u) row.emplace_back(i + d, c);
        e.insert(row);
    }
    for (const auto& w : b.vectors) e.insert(w);
    SubspaceBasis out{d, {}};
    for (auto it = e.rows().lower_bound(d); it != e.rows().end(); ++it) {
        IntRow r;
        for (const auto& [i, c] : it->second) r.emplace_back(i - d, c);
        out.vectors.push_back(to_sparse_vector(r));
    }
    return out;
}

}  // namespace fusion
