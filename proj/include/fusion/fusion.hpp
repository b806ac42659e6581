#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/linalg.hpp"
#include "fusion/shapes.hpp"
#include "fusion/symalg.hpp"

namespace fusion {

// A tableau of lambda/mu with the data fixing F: the form on C^N and the
// extra dimension M. Symmetric forms constrain columns and use the base point
// -1/2; alternating forms constrain rows and use +1/2.
struct FusionConfig {
    // Throws ParityError (alternating with odd N or M) and InvalidLabel
    // (lambda not a label for G_{N+M} or mu not one for G_M).
    FusionConfig(StandardTableau tableau, int N, int M, FormKind kind);
    // Parity is still enforced; the label conditions are not.
    static FusionConfig unchecked(StandardTableau tableau, int N, int M, FormKind kind);

    StandardTableau tableau;
    int N;
    int M;
    FormKind kind;

    int n() const { return tableau.n(); }
    Group group() const { return kind == FormKind::Symmetric ? Group::O : Group::Sp; }
    Mode constraint_mode() const { return kind == FormKind::Symmetric ? Mode::Column : Mode::Row; }
    Rational base_point() const { return Rational(kind == FormKind::Symmetric ? -1 : 1, 2); }
    BilinearForm form() const { return BilinearForm::standard(kind, N); }
    FusionConfig with_tableau(StandardTableau t) const;
    std::string str() const;

private:
    struct NoLabelCheck {};
    FusionConfig(StandardTableau tableau, int N, int M, FormKind kind, NoLabelCheck);
};

// Pass flag plus a human-readable counterexample when it fails.
struct Verdict {
    bool pass = true;
    std::string witness;

    explicit operator bool() const { return pass; }
    static Verdict ok() { return {}; }
    static Verdict fail(std::string w) { return {false, std::move(w)}; }
};

std::string describe(const SparseVector& v, int N, int n);

// e_O from the row and column fusion routes; throws if they differ.
GroupElementQ e_element(const StandardTableau& O);
SparseOperator e_operator(const StandardTableau& O, int N);

// Value at eps = 0 of the Q-factor product times the P-factor product, with
// t_k = base + r_k*eps. Entries are carried as truncated power series in eps:
// the order needed is the number of Q-denominators vanishing at eps = 0.
SparseOperator f_operator_general(const FusionConfig& cfg);
// Same limit with every operator entry a reduced rational function in eps.
// Slow; for cross-checks on small configs.
SparseOperator f_operator_general_rf(const FusionConfig& cfg);

enum class ClosedFormula { ColO, RowSp, AnySp, AnySO, Regular };
ClosedFormula parse_formula(std::string_view s);
const char* formula_name(ClosedFormula f);
std::vector<ClosedFormula> all_formulas();
bool applicable(const FusionConfig& cfg, ClosedFormula f);
// Ordered product of the retained Q-factors times E. Throws NotApplicable.
SparseOperator f_operator_closed(const FusionConfig& cfg, ClosedFormula f);

// l!/dim of the S_l irrep.
Rational idempotency_scalar(const Partition& lambda);
// sigma with A^2 = sigma*A when it exists; nullopt for A = 0 as well.
std::optional<Rational> measure_scalar(const SparseOperator& a);

Verdict verify_scaled_idempotent(const SparseOperator& a, const Rational& scalar);
// F E = scalar F and E F = scalar F.
Verdict verify_divisibility(const SparseOperator& f, const SparseOperator& e, const Rational& scalar);
// F = X E and F = E Y for some X, Y: ker E inside ker F and im F inside im E.
Verdict verify_divisibility_spaces(const SparseOperator& f, const SparseOperator& e);
// M = 0, straight shape: im F = im E meet traceless, Q_kl F = 0 for all
// pairs, and F v = E v on traceless v.
Verdict verify_traceless_image(const FusionConfig& cfg);
// P_{k,k+1} R_{k+1,k}(c_{k+1},c_k) F_L = F_{s_k L} R_{k,k+1}(c_k,c_{k+1}) P_{k,k+1}.
// Throws NonStandardNeighbor.
Verdict verify_exchange(const FusionConfig& cfg, int k);
// Compression of F_L for G_{N+M} to (traceless C^M)^{m} (x) (C^N)^{l-m} equals
// E_Upsilon (x) F_Omega(M). Throws SizeLimitExceeded past (N+M)^l = 1000 and
// NotApplicable when the split labels are invalid.
Verdict verify_theta_factorization(const StandardTableau& L, int m, int N, int M, FormKind kind);
// rank F <= rank E.
Verdict verify_rank_bound(const FusionConfig& cfg);

}  // namespace fusion
