#include "fusion/fusion.hpp"

#include <sstream>

namespace fusion {

namespace {

struct Pair {
    int k, l;
};

std::vector<Pair> lex_pairs(int n) {
    std::vector<Pair> out;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) out.push_back({k, l});
    return out;
}

int line_of(const StandardTableau& T, Mode mode, int k) {
    return mode == Mode::Row ? T.cell_of(k).row : T.cell_of(k).col;
}

// Q-denominator c_k + c_l + t_k + t_l + N + M along the line, as d0 + d1*eps.
std::pair<Rational, Rational> q_denominator(const FusionConfig& cfg, const Pair& p) {
    const auto& T = cfg.tableau;
    Rational d0 = Rational(T.content_of(p.k) + T.content_of(p.l) + cfg.N + cfg.M) + cfg.base_point() * Rational(2);
    Rational d1(line_of(T, cfg.constraint_mode(), p.k) + line_of(T, cfg.constraint_mode(), p.l));
    return {d0, d1};
}

SparseOperator plus(const SparseOperator& a, const SparseOperator& b) { return pruned(SparseOperator(a + b)); }
SparseOperator minus(const SparseOperator& a, const SparseOperator& b) { return pruned(SparseOperator(a - b)); }

// First column where a and b differ, as a witness.
std::string op_difference(const SparseOperator& a, const SparseOperator& b, int N, int n) {
    SparseOperator d = minus(a, b);
    for (Eigen::Index c = 0; c < d.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(d, c); it; ++it)
            return "differ on " + describe(unit_vector(c), N, n) + ": " + describe(apply_op(d, unit_vector(c)), N, n);
    return "";
}

int largest_column(const SkewShape& s) { return conjugate(s.lambda())[1]; }

// The Q-factors use `form`, which may differ from the standard one.
SparseOperator f_limit(const FusionConfig& cfg, const BilinearForm& form) {
    const int n = cfg.n(), N = form.N;
    check_size(N, n);
    const auto pairs = lex_pairs(n);
    int order = 0;
    for (const auto& p : pairs)
        if (q_denominator(cfg, p).first.is_zero()) ++order;

    GroupElementRF g = fusion_product(cfg.tableau, cfg.constraint_mode());
    std::vector<GroupElementQ> series(order + 1, GroupElementQ(n));
    for (const auto& [s, f] : g.terms()) {
        auto t = f.taylor(order + 1);
        for (int j = 0; j <= order; ++j) series[j].add(s, t[j]);
    }
    std::vector<SparseOperator> a;
    for (const auto& gj : series) a.push_back(act(gj, N));

    Rational denom(1);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [d0, d1] = q_denominator(cfg, *it);
        denom *= d0.is_zero() ? d1 : d0;
        const SparseOperator q = q_op(it->k, it->l, form, n);
        // (d0 + d1 eps - Q) * sum_j a_j eps^j, truncated
        for (int j = order; j >= 0; --j) {
            SparseOperator next = minus(scaled(a[j], d0), product(q, a[j]));
            if (j > 0) next = plus(next, scaled(a[j - 1], d1));
            a[j] = std::move(next);
        }
    }
    for (int j = 0; j < order; ++j)
        if (!is_zero_op(a[j]))
            throw PoleAtLimit("F has a pole at the base point for " + cfg.str() + " (order " +
                              std::to_string(order - j) + ")");
    return scaled(a[order], inverse(denom));
}

}  // namespace

FusionConfig::FusionConfig(StandardTableau t, int N_, int M_, FormKind kind_, NoLabelCheck)
    : tableau(std::move(t)), N(N_), M(M_), kind(kind_) {
    if (N < 1 || M < 0) throw InvalidLabel("need N >= 1 and M >= 0");
    if (kind == FormKind::Alternating && (N % 2 != 0 || M % 2 != 0))
        throw ParityError("alternating forms need even N and M, got N=" + std::to_string(N) +
                          " M=" + std::to_string(M));
}

FusionConfig FusionConfig::unchecked(StandardTableau t, int N, int M, FormKind kind) {
    return FusionConfig(std::move(t), N, M, kind, NoLabelCheck{});
}

FusionConfig::FusionConfig(StandardTableau t, int N_, int M_, FormKind kind_)
    : FusionConfig(std::move(t), N_, M_, kind_, NoLabelCheck{}) {
    const auto& sh = tableau.shape();
    if (!validate_label(sh.lambda(), group(), N + M))
        throw InvalidLabel(sh.lambda().str() + " is not a label for " + group_name(group()) + "_" +
                           std::to_string(N + M));
    if (!validate_label(sh.mu(), group(), M))
        throw InvalidLabel(sh.mu().str() + " is not a label for " + group_name(group()) + "_" + std::to_string(M));
}

FusionConfig FusionConfig::with_tableau(StandardTableau t) const {
    FusionConfig c = *this;
    c.tableau = std::move(t);
    return c;
}

std::string FusionConfig::str() const {
    std::ostringstream os;
    os << group_name(group()) << " N=" << N << " M=" << M << " " << tableau.str();
    return os.str();
}

std::string describe(const SparseVector& v, int N, int n) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")e";
        for (int x : decode(i, N, n)) out += std::to_string(x);
    }
    return out;
}

GroupElementQ e_element(const StandardTableau& O) {
    GroupElementQ row = fusion_e_skew(O, Mode::Row);
    if (!(row == fusion_e_skew(O, Mode::Column)))
        throw Error("row and column fusion disagree for " + O.str());
    return row;
}

SparseOperator e_operator(const StandardTableau& O, int N) {
    check_size(N, O.n());
    return act(e_element(O), N);
}

SparseOperator f_operator_general(const FusionConfig& cfg) { return f_limit(cfg, cfg.form()); }

SparseOperator f_operator_general_rf(const FusionConfig& cfg) {
    const int n = cfg.n(), N = cfg.N;
    check_size(N, n);
    const auto pairs = lex_pairs(n);
    SparseOp<RationalFunction> a = act(fusion_product(cfg.tableau, cfg.constraint_mode()), N);
    const BilinearForm form = cfg.form();
    const auto id = identity_op<RationalFunction>(a.rows());
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [d0, d1] = q_denominator(cfg, *it);
        RationalFunction inv_d(Polynomial(1), Polynomial::linear(d0, d1));
        auto q = map_entries<RationalFunction>(q_op(it->k, it->l, form, n),
                                               [&](const Rational& v) { return RationalFunction(v) * inv_d; });
        SparseOp<RationalFunction> factor = id - q;
        a = product(factor, a);
    }
    return map_entries<Rational>(a, [](const RationalFunction& f) { return f.eval_at_zero(); });
}

ClosedFormula parse_formula(std::string_view s) {
    for (auto f : all_formulas())
        if (s == formula_name(f)) return f;
    throw ParseError("unknown closed formula '" + std::string(s) + "'");
}

const char* formula_name(ClosedFormula f) {
    switch (f) {
        case ClosedFormula::ColO: return "col_O";
        case ClosedFormula::RowSp: return "row_Sp";
        case ClosedFormula::AnySp: return "any_Sp";
        case ClosedFormula::AnySO: return "any_SO";
        case ClosedFormula::Regular: return "regular_case";
    }
    return "";
}

std::vector<ClosedFormula> all_formulas() {
    return {ClosedFormula::ColO, ClosedFormula::RowSp, ClosedFormula::AnySp, ClosedFormula::AnySO,
            ClosedFormula::Regular};
}

bool applicable(const FusionConfig& cfg, ClosedFormula f) {
    const bool sym = cfg.kind == FormKind::Symmetric;
    const auto& sh = cfg.tableau.shape();
    const bool small = 2 * largest_column(sh) <= cfg.N + cfg.M;
    switch (f) {
        case ClosedFormula::ColO: return sym && cfg.tableau == column_tableau(sh);
        case ClosedFormula::RowSp: return !sym && cfg.tableau == row_tableau(sh);
        case ClosedFormula::AnySp: return !sym && sh.is_straight();
        case ClosedFormula::AnySO: return sym && sh.is_straight() && small;
        case ClosedFormula::Regular: return small;
    }
    return false;
}

SparseOperator f_operator_closed(const FusionConfig& cfg, ClosedFormula f) {
    if (!applicable(cfg, f))
        throw NotApplicable(std::string(formula_name(f)) + " does not apply to " + cfg.str());
    const auto& T = cfg.tableau;
    const int n = cfg.n();
    std::vector<Pair> kept;
    for (const auto& p : lex_pairs(n)) {
        if (f == ClosedFormula::ColO && T.cell_of(p.k).col == T.cell_of(p.l).col) continue;
        if (f == ClosedFormula::RowSp && T.cell_of(p.k).row == T.cell_of(p.l).row) continue;
        kept.push_back(p);
    }
    SparseOperator a = e_operator(T, cfg.N);
    const BilinearForm form = cfg.form();
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
        Rational d = q_denominator(cfg, *it).first;
        if (d.is_zero())
            throw DivisionByZero(std::string(formula_name(f)) + ": zero denominator for pair (" +
                                 std::to_string(it->k) + "," + std::to_string(it->l) + ")");
        a = minus(a, scaled(product(q_op(it->k, it->l, form, n), a), inverse(d)));
    }
    return a;
}

Rational idempotency_scalar(const Partition& lambda) {
    return Rational(factorial(lambda.size())) / Rational(dim_sym_irrep(lambda));
}

std::optional<Rational> measure_scalar(const SparseOperator& a) {
    for (Eigen::Index c = 0; c < a.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(a, c); it; ++it) {
            if (it.value().is_zero()) continue;
            SparseOperator sq = product(a, a);
            Rational sigma = sq.coeff(it.row(), it.col()) / it.value();
            if (equal_op(sq, scaled(a, sigma))) return sigma;
            return std::nullopt;
        }
    return std::nullopt;
}

Verdict verify_scaled_idempotent(const SparseOperator& a, const Rational& scalar) {
    if (equal_op(product(a, a), scaled(a, scalar))) return Verdict::ok();
    return Verdict::fail("A^2 != " + scalar.str() + " A");
}

Verdict verify_divisibility(const SparseOperator& f, const SparseOperator& e, const Rational& scalar) {
    SparseOperator sf = scaled(f, scalar);
    if (!equal_op(product(f, e), sf)) return Verdict::fail("F E != " + scalar.str() + " F");
    if (!equal_op(product(e, f), sf)) return Verdict::fail("E F != " + scalar.str() + " F");
    return Verdict::ok();
}

Verdict verify_divisibility_spaces(const SparseOperator& f, const SparseOperator& e) {
    SubspaceBasis im_e = image_basis(e);
    for (const auto& v : image_basis(f).vectors)
        if (!contains(im_e, v)) return Verdict::fail("image of F leaves image of E");
    for (const auto& v : kernel_basis(e).vectors)
        if (!apply_op(f, v).empty()) return Verdict::fail("kernel of E not killed by F");
    return Verdict::ok();
}

Verdict verify_traceless_image(const FusionConfig& cfg) {
    if (cfg.M != 0 || !cfg.tableau.shape().is_straight())
        throw NotApplicable("traceless image check needs M = 0 and a straight shape");
    const int N = cfg.N, n = cfg.n();
    const BilinearForm form = cfg.form();
    SparseOperator f = f_operator_general(cfg);
    SparseOperator e = e_operator(cfg.tableau, N);
    SubspaceBasis traceless = traceless_basis(N, n, form);
    if (!subspace_equal(image_basis(f), intersect(image_basis(e), traceless)))
        return Verdict::fail("image of F differs from image of E meet traceless");
    for (const auto& p : lex_pairs(n))
        if (!is_zero_op(product(q_op(p.k, p.l, form, n), f)))
            return Verdict::fail("Q_" + std::to_string(p.k) + std::to_string(p.l) + " F != 0");
    for (const auto& v : traceless.vectors)
        if (apply_op(f, v) != apply_op(e, v)) return Verdict::fail("F v != E v at v = " + describe(v, N, n));
    return Verdict::ok();
}

Verdict verify_exchange(const FusionConfig& cfg, int k) {
    const auto& L = cfg.tableau;
    const int n = L.n(), N = cfg.N;
    if (k < 1 || k >= n) throw IndexError("k out of range");
    auto moved = L.swap_adjacent(k);
    if (!moved) throw NonStandardNeighbor("s_" + std::to_string(k) + " " + L.str() + " is not standard");
    const SparseOperator p = p_op(k, k + 1, N, n);
    const SparseOperator id = identity_op<Rational>(p.rows());
    const Rational d(L.content_of(k + 1) - L.content_of(k));
    // R_{k+1,k}(c_{k+1}, c_k) and R_{k,k+1}(c_k, c_{k+1})
    SparseOperator r_up = minus(id, scaled(p, inverse(d)));
    SparseOperator r_down = plus(id, scaled(p, inverse(d)));
    SparseOperator lhs = product(product(p, r_up), f_operator_general(cfg));
    SparseOperator rhs = product(product(f_operator_general(cfg.with_tableau(*moved)), r_down), p);
    if (equal_op(lhs, rhs)) return Verdict::ok();
    return Verdict::fail(op_difference(lhs, rhs, N, n));
}

Verdict verify_theta_factorization(const StandardTableau& L, int m, int N, int M, FormKind kind) {
    if (!L.shape().is_straight()) throw SkewShapeError("theta factorization needs a straight shape");
    const int l = L.n(), n = l - m, dim_l = N + M;
    if (m < 0 || m >= l) throw IndexError("m out of range");
    if (tensor_dim(dim_l, l) > 1000)
        throw SizeLimitExceeded("(N+M)^l = " + std::to_string(tensor_dim(dim_l, l)) + " exceeds 1000");
    auto [ups, omega] = L.split(m);
    std::optional<FusionConfig> small;
    std::optional<FusionConfig> big;
    try {
        small.emplace(omega, N, M, kind);
        big.emplace(L, dim_l, 0, kind);
        if (m > 0) validate_label(ups.shape().lambda(), kind == FormKind::Symmetric ? Group::O : Group::Sp, M);
    } catch (const ParityError& e) {
        throw NotApplicable(std::string("split labels invalid: ") + e.what());
    } catch (const InvalidLabel& e) {
        throw NotApplicable(std::string("split labels invalid: ") + e.what());
    }

    // Form on C^L: C^N on coordinates 1..N, C^M on N+1..N+M.
    const BilinearForm form_n = BilinearForm::standard(kind, N);
    DenseQ gram = DenseQ::Zero(dim_l, dim_l);
    gram.topLeftCorner(N, N) = form_n.gram;
    if (M > 0) gram.bottomRightCorner(M, M) = BilinearForm::standard(kind, M).gram;
    const BilinearForm form_l = BilinearForm::from_gram(kind, gram);

    SparseOperator f_l = f_limit(*big, form_l);

    // Operators on (C^M)^{m} (x) (C^N)^{n}, Upsilon slots most significant.
    const long dim_m = tensor_dim(M, m), dim_n = tensor_dim(N, n);
    SparseOperator e_ups = m == 0 ? identity_op<Rational>(1) : act(e_tableau(ups), M);
    SparseOperator h = identity_op<Rational>(dim_m);
    if (m > 1) {
        const BilinearForm form_m = BilinearForm::standard(kind, M);
        SubspaceBasis k = traceless_basis(M, m, form_m);
        std::vector<SparseVector> img;
        for (const auto& p : lex_pairs(m))
            for (auto& v : image_basis(q_op(p.k, p.l, form_m, m)).vectors) img.push_back(std::move(v));
        SubspaceBasis s = span_of(dim_m, img);
        if (k.dim() + s.dim() != dim_m) throw Error("traceless tensors have no complement");
        DenseQ b = DenseQ::Zero(dim_m, dim_m);
        long col = 0;
        for (const auto* part : {&k, &s})
            for (const auto& v : part->vectors) {
                for (const auto& [i, c] : v) b(i, col) = c;
                ++col;
            }
        DenseQ binv = inverse(b);
        DenseQ proj = b.leftCols(k.dim()) * binv.topRows(k.dim());
        std::vector<Eigen::Triplet<Rational>> trip;
        for (long i = 0; i < dim_m; ++i)
            for (long j = 0; j < dim_m; ++j)
                if (!proj(i, j).is_zero()) trip.emplace_back(i, j, proj(i, j));
        h = SparseOperator(dim_m, dim_m);
        h.setFromTriplets(trip.begin(), trip.end());
    }

    std::vector<long> place(dim_m * dim_n);
    for (long r = 0; r < dim_m * dim_n; ++r) {
        std::vector<int> idx = decode(r / dim_n, M, m);
        for (int& i : idx) i += N;
        for (int j : decode(r % dim_n, N, n)) idx.push_back(j);
        place[r] = encode(idx, dim_l);
    }
    const long full = tensor_dim(dim_l, l);
    auto embed = [&](const SparseOperator& a) {
        std::vector<Eigen::Triplet<Rational>> trip;
        for (Eigen::Index c = 0; c < a.outerSize(); ++c)
            for (SparseOperator::InnerIterator it(a, c); it; ++it)
                trip.emplace_back(place[it.row()], place[c], it.value());
        SparseOperator out(full, full);
        out.setFromTriplets(trip.begin(), trip.end());
        return out;
    };
    SparseOperator j = embed(kron(h, identity_op<Rational>(dim_n)));
    SparseOperator rhs = embed(kron(e_ups, f_operator_general(*small)));
    SparseOperator lhs = product(product(j, f_l), j);
    SparseOperator target = product(rhs, j);
    if (equal_op(lhs, target)) return Verdict::ok();
    return Verdict::fail(op_difference(lhs, target, dim_l, l));
}

Verdict verify_rank_bound(const FusionConfig& cfg) {
    long rf = rank(f_operator_general(cfg));
    long re = rank(e_operator(cfg.tableau, cfg.N));
    if (rf <= re) return Verdict::ok();
    return Verdict::fail("rank F = " + std::to_string(rf) + " > rank E = " + std::to_string(re));
}

}  // namespace fusion
