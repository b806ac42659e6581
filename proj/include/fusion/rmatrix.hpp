#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fusion/fusion.hpp"

namespace fusion {

using Point = std::vector<Rational>;

// 1 - P_ij/(x-y) on (C^N)^{n}. Throws SampleAtPole at x = y.
SparseOperator r_op(int i, int j, int N, int n, const Rational& x, const Rational& y);
// 1 + Q_ij/(x+y). Throws SampleAtPole at x + y = 0.
SparseOperator rtilde_op(int i, int j, const BilinearForm& form, int n, const Rational& x, const Rational& y);
// 1 - Q_ij/(x+y+N). Throws SampleAtPole at x + y + N = 0.
SparseOperator rbar_op(int i, int j, const BilinearForm& form, int n, const Rational& x, const Rational& y);

// An operator identity lhs(p) = rhs(p) in `arity` free parameters. After
// clearing denominators both sides are polynomials of degree at most
// degree_bound in each parameter, so agreement on a grid with
// degree_bound + 1 values per parameter proves it.
struct Identity {
    std::string name;
    std::string ref;
    int arity = 1;
    int degree_bound = 1;
    std::function<bool(const Point&)> at_pole;
    std::function<SparseOperator(const Point&)> lhs;
    std::function<SparseOperator(const Point&)> rhs;
};

struct IdentityCheck {
    std::string name;
    std::string ref;
    int degree_bound = 0;
    std::vector<Point> samples;
    std::optional<std::uint64_t> seed;
    bool certified = false;
    bool pass = true;
    std::string witness;

    explicit operator bool() const { return pass; }
};

// Evaluates at the given points; throws SampleAtPole if one is on the locus.
IdentityCheck run_identity(const Identity& id, const std::vector<Point>& samples);
// Seeded grid of degree_bound + 1 rationals per parameter, resampled until no
// grid point is a pole; a pass certifies the identity.
IdentityCheck certify(const Identity& id, std::uint64_t seed);
std::vector<Point> certificate_grid(const Identity& id, std::uint64_t seed);

enum class YBKind { Plain, Tilde, Bar, Mixed };
const char* yb_name(YBKind k);
// Three slots of (C^N)^{3}, parameters (x, y, z).
Identity yang_baxter_identity(YBKind which, const BilinearForm& form);
// R_12(x,y) R_21(y,x) = 1 - 1/(x-y)^2; parameters (x, y).
Identity r_unitarity_identity(int N);
// Rtilde_12(x,y) Rbar_12(x,y) = 1.
Identity tilde_bar_identity(const BilinearForm& form);
// Rtilde_12(x,y) = Rtilde_21(y,x) and the same for Rbar.
Identity tilde_symmetry_identity(const BilinearForm& form);
Identity bar_symmetry_identity(const BilinearForm& form);

// Auxiliary slots 1, 2; module slots 3..n+2; T(x) = R_13(x,z_1)...R_{1,n+2}(x,z_n).
Identity rtt_identity(const std::vector<Rational>& z, int N);
// S(x) = Rtilde_{1,n+2}(x,z_n)...Rtilde_13(x,z_1) R_13(x,z_1)...R_{1,n+2}(x,z_n).
Identity reflection_identity(const std::vector<Rational>& z, const BilinearForm& form);
// The two images of Ttilde(x)T(x), with the R factors outside or inside. They
// agree for n = 1 and need not for larger n.
Identity image_coincidence_identity(const std::vector<Rational>& z, const BilinearForm& form);

// Auxiliary slot 1, module slots 2..n+1, z_k = c_k + shift; P0 reverses the
// module slots.
Identity intertwiner_e_identity(const StandardTableau& O, int N, const Rational& shift);
// d_k = c_k + M/2 -+ 1/2, F acting on the module slots.
Identity intertwiner_f_identity(const FusionConfig& cfg);
std::vector<Rational> shifted_contents(const FusionConfig& cfg);

// R_12(x,c_1)...R_{1,l+1}(x,c_l)(1 (x) E_L) = (1 - sum_k P_{1,k+1}/x)(1 (x) E_L).
Identity content_product_identity(const StandardTableau& L, int N);
// M = 0, straight shape, d_k = c_k -+ 1/2:
// Rtilde...Rtilde R...R (1 (x) F_L) = (1 - sum_k (P - Q)_{1,k+1}/(x +- 1/2))(1 (x) F_L).
Identity twisted_content_identity(const FusionConfig& cfg);

// prod_k (x - mu_k + k)(x + k - 1) / ((x - mu_k + k - 1)(x + k)).
Rational g_mu(const Partition& mu, const Rational& x);
// prod_k ((x - c_k)^2 - 1)/(x - c_k)^2 over the contents of T.
Rational h_of(const StandardTableau& T, const Rational& x);
Rational h_of(const Partition& mu, const Rational& x);
// g_mu(x) h(x) = 1 as 1x1 operators, h from the tableau T of shape mu.
Identity g_h_identity(const StandardTableau& T);

}  // namespace fusion
