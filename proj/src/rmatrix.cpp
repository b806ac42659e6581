#include "fusion/rmatrix.hpp"

#include <map>
#include <memory>
#include <random>
#include <set>

namespace fusion {

namespace {

SparseOperator minus(const SparseOperator& a, const SparseOperator& b) { return pruned(SparseOperator(a - b)); }
SparseOperator plus(const SparseOperator& a, const SparseOperator& b) { return pruned(SparseOperator(a + b)); }

Rational pole_guard(const Rational& d, const char* what) {
    if (d.is_zero()) throw SampleAtPole(std::string("sample on the pole locus of ") + what);
    return inverse(d);
}

// P_ij and Q_ij on (C^N)^{n}, built on first use.
class Slots {
public:
    Slots(const BilinearForm& form, int n) : form_(form), n_(n), id_(identity_op<Rational>(tensor_dim(form.N, n))) {
        check_size(form.N, n);
    }

    const BilinearForm& form() const { return form_; }
    int N() const { return form_.N; }
    int n() const { return n_; }
    const SparseOperator& id() const { return id_; }

    const SparseOperator& P(int i, int j) {
        auto key = std::minmax(i, j);
        auto it = p_.find(key);
        if (it == p_.end()) it = p_.emplace(key, p_op(i, j, form_.N, n_)).first;
        return it->second;
    }
    const SparseOperator& Q(int i, int j) {
        auto key = std::minmax(i, j);
        auto it = q_.find(key);
        if (it == q_.end()) it = q_.emplace(key, q_op(i, j, form_, n_)).first;
        return it->second;
    }

    SparseOperator R(int i, int j, const Rational& x, const Rational& y) {
        return minus(id_, scaled(P(i, j), pole_guard(x - y, "R")));
    }
    SparseOperator Rt(int i, int j, const Rational& x, const Rational& y) {
        return plus(id_, scaled(Q(i, j), pole_guard(x + y, "Rtilde")));
    }
    SparseOperator Rb(int i, int j, const Rational& x, const Rational& y) {
        return minus(id_, scaled(Q(i, j), pole_guard(x + y + Rational(form_.N), "Rbar")));
    }
    // 1 (x) ... (x) a with `a` on the last slots.
    SparseOperator lift(const SparseOperator& a) const {
        return kron(identity_op<Rational>(id_.rows() / a.rows()), a);
    }

private:
    BilinearForm form_;
    int n_;
    SparseOperator id_;
    std::map<std::pair<int, int>, SparseOperator> p_, q_;
};

SparseOperator chain(const std::vector<SparseOperator>& fs) {
    SparseOperator acc = fs.front();
    for (size_t k = 1; k < fs.size(); ++k) acc = product(acc, fs[k]);
    return acc;
}

bool hits(const Rational& v, const std::vector<Rational>& bad) {
    for (const auto& b : bad)
        if (v == b) return true;
    return false;
}

std::vector<Rational> negated(std::vector<Rational> v) {
    for (auto& x : v) x = -x;
    return v;
}

std::string z_str(const std::vector<Rational>& z) {
    std::string out = " z=(";
    for (size_t k = 0; k < z.size(); ++k) out += (k ? "," : "") + z[k].str();
    return out + ")";
}

std::string point_str(const Point& p) {
    std::string out = "(";
    for (size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + p[k].str();
    return out + ")";
}

}  // namespace

SparseOperator r_op(int i, int j, int N, int n, const Rational& x, const Rational& y) {
    return minus(identity_op<Rational>(tensor_dim(N, n)), scaled(p_op(i, j, N, n), pole_guard(x - y, "R")));
}

SparseOperator rtilde_op(int i, int j, const BilinearForm& form, int n, const Rational& x, const Rational& y) {
    return plus(identity_op<Rational>(tensor_dim(form.N, n)), scaled(q_op(i, j, form, n), pole_guard(x + y, "Rtilde")));
}

SparseOperator rbar_op(int i, int j, const BilinearForm& form, int n, const Rational& x, const Rational& y) {
    return minus(identity_op<Rational>(tensor_dim(form.N, n)),
                 scaled(q_op(i, j, form, n), pole_guard(x + y + Rational(form.N), "Rbar")));
}

IdentityCheck run_identity(const Identity& id, const std::vector<Point>& samples) {
    IdentityCheck out;
    out.name = id.name;
    out.ref = id.ref;
    out.degree_bound = id.degree_bound;
    out.samples = samples;
    for (const auto& p : samples) {
        if (static_cast<int>(p.size()) != id.arity) throw IndexError("sample has the wrong number of parameters");
        if (id.at_pole(p)) throw SampleAtPole(id.name + ": sample " + point_str(p) + " is a pole");
        SparseOperator l = id.lhs(p), r = id.rhs(p);
        if (!equal_op(l, r)) {
            out.pass = false;
            out.witness = "sides differ at " + point_str(p);
            break;
        }
    }
    return out;
}

std::vector<Point> certificate_grid(const Identity& id, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 9);
    const int per = id.degree_bound + 1;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<Rational>> axes(id.arity);
        for (auto& axis : axes) {
            std::set<Rational> seen;
            while (static_cast<int>(axis.size()) < per) {
                Rational v(num(rng), den(rng));
                if (seen.insert(v).second) axis.push_back(v);
            }
        }
        std::vector<Point> grid{{}};
        for (const auto& axis : axes) {
            std::vector<Point> next;
            for (const auto& p : grid)
                for (const auto& v : axis) {
                    Point q = p;
                    q.push_back(v);
                    next.push_back(std::move(q));
                }
            grid = std::move(next);
        }
        bool clean = true;
        for (const auto& p : grid)
            if (id.at_pole(p)) {
                clean = false;
                break;
            }
        if (clean) return grid;
    }
    throw SampleAtPole(id.name + ": could not find a grid off the pole locus");
}

IdentityCheck certify(const Identity& id, std::uint64_t seed) {
    IdentityCheck out = run_identity(id, certificate_grid(id, seed));
    out.seed = seed;
    out.certified = true;
    return out;
}

const char* yb_name(YBKind k) {
    switch (k) {
        case YBKind::Plain: return "yang-baxter";
        case YBKind::Tilde: return "yang-baxter-tilde";
        case YBKind::Bar: return "yang-baxter-bar";
        case YBKind::Mixed: return "yang-baxter-mixed";
    }
    return "";
}

Identity yang_baxter_identity(YBKind which, const BilinearForm& form) {
    auto s = std::make_shared<Slots>(form, 3);
    const Rational L(form.N);
    Identity id;
    id.name = std::string(yb_name(which)) + " N=" + std::to_string(form.N);
    id.arity = 3;
    id.degree_bound = 3;
    auto xyz = [](const Point& p) { return std::tuple(p[0], p[1], p[2]); };
    switch (which) {
        case YBKind::Plain:
            id.ref = "R12(x,y) R13(x,z) R23(y,z) = R23(y,z) R13(x,z) R12(x,y)";
            id.at_pole = [](const Point& p) { return p[0] == p[1] || p[0] == p[2] || p[1] == p[2]; };
            id.lhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->R(1, 2, x, y), s->R(1, 3, x, z), s->R(2, 3, y, z)});
            };
            id.rhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->R(2, 3, y, z), s->R(1, 3, x, z), s->R(1, 2, x, y)});
            };
            break;
        case YBKind::Tilde:
            id.ref = "Rt13(x,z) Rt12(x,y) R23(y,z) = R23(y,z) Rt12(x,y) Rt13(x,z)";
            id.at_pole = [](const Point& p) { return (p[0] + p[2]).is_zero() || (p[0] + p[1]).is_zero() || p[1] == p[2]; };
            id.lhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->Rt(1, 3, x, z), s->Rt(1, 2, x, y), s->R(2, 3, y, z)});
            };
            id.rhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->R(2, 3, y, z), s->Rt(1, 2, x, y), s->Rt(1, 3, x, z)});
            };
            break;
        case YBKind::Bar:
            id.ref = "Rb12(x,y) Rb13(x,z) R23(y,z) = R23(y,z) Rb13(x,z) Rb12(x,y)";
            id.at_pole = [L](const Point& p) {
                return (p[0] + p[1] + L).is_zero() || (p[0] + p[2] + L).is_zero() || p[1] == p[2];
            };
            id.lhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->Rb(1, 2, x, y), s->Rb(1, 3, x, z), s->R(2, 3, y, z)});
            };
            id.rhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->R(2, 3, y, z), s->Rb(1, 3, x, z), s->Rb(1, 2, x, y)});
            };
            break;
        case YBKind::Mixed:
            id.ref = "Rt12(x,y) R13(x,z) Rb23(y,z) = Rb23(y,z) R13(x,z) Rt12(x,y)";
            id.at_pole = [L](const Point& p) {
                return (p[0] + p[1]).is_zero() || p[0] == p[2] || (p[1] + p[2] + L).is_zero();
            };
            id.lhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->Rt(1, 2, x, y), s->R(1, 3, x, z), s->Rb(2, 3, y, z)});
            };
            id.rhs = [s, xyz](const Point& p) {
                auto [x, y, z] = xyz(p);
                return chain({s->Rb(2, 3, y, z), s->R(1, 3, x, z), s->Rt(1, 2, x, y)});
            };
            break;
    }
    return id;
}

Identity r_unitarity_identity(int N) {
    auto s = std::make_shared<Slots>(BilinearForm::symmetric(N), 2);
    Identity id;
    id.name = "r-unitarity N=" + std::to_string(N);
    id.ref = "R12(x,y) R21(y,x) = 1 - 1/(x-y)^2";
    id.arity = 2;
    id.degree_bound = 2;
    id.at_pole = [](const Point& p) { return p[0] == p[1]; };
    id.lhs = [s](const Point& p) { return product(s->R(1, 2, p[0], p[1]), s->R(2, 1, p[1], p[0])); };
    id.rhs = [s](const Point& p) {
        Rational d = p[0] - p[1];
        return scaled(s->id(), Rational(1) - inverse(d * d));
    };
    return id;
}

Identity tilde_bar_identity(const BilinearForm& form) {
    auto s = std::make_shared<Slots>(form, 2);
    const Rational L(form.N);
    Identity id;
    id.name = "tilde-bar-inverse N=" + std::to_string(form.N);
    id.ref = "Rt12(x,y) Rb12(x,y) = 1";
    id.arity = 2;
    id.degree_bound = 2;
    id.at_pole = [L](const Point& p) { return (p[0] + p[1]).is_zero() || (p[0] + p[1] + L).is_zero(); };
    id.lhs = [s](const Point& p) { return product(s->Rt(1, 2, p[0], p[1]), s->Rb(1, 2, p[0], p[1])); };
    id.rhs = [s](const Point&) { return s->id(); };
    return id;
}

Identity tilde_symmetry_identity(const BilinearForm& form) {
    auto s = std::make_shared<Slots>(form, 2);
    Identity id;
    id.name = "tilde-symmetry N=" + std::to_string(form.N);
    id.ref = "Rt12(x,y) = Rt21(y,x)";
    id.arity = 2;
    id.degree_bound = 1;
    id.at_pole = [](const Point& p) { return (p[0] + p[1]).is_zero(); };
    id.lhs = [s](const Point& p) { return s->Rt(1, 2, p[0], p[1]); };
    id.rhs = [s](const Point& p) { return s->Rt(2, 1, p[1], p[0]); };
    return id;
}

Identity bar_symmetry_identity(const BilinearForm& form) {
    auto s = std::make_shared<Slots>(form, 2);
    const Rational L(form.N);
    Identity id;
    id.name = "bar-symmetry N=" + std::to_string(form.N);
    id.ref = "Rb12(x,y) = Rb21(y,x)";
    id.arity = 2;
    id.degree_bound = 1;
    id.at_pole = [L](const Point& p) { return (p[0] + p[1] + L).is_zero(); };
    id.lhs = [s](const Point& p) { return s->Rb(1, 2, p[0], p[1]); };
    id.rhs = [s](const Point& p) { return s->Rb(2, 1, p[1], p[0]); };
    return id;
}

Identity rtt_identity(const std::vector<Rational>& z, int N) {
    const int n = static_cast<int>(z.size());
    auto s = std::make_shared<Slots>(BilinearForm::symmetric(N), n + 2);
    auto t = [s, z, n](int aux, const Rational& x) {
        std::vector<SparseOperator> fs;
        for (int k = 1; k <= n; ++k) fs.push_back(s->R(aux, k + 2, x, z[k - 1]));
        return chain(fs);
    };
    Identity id;
    id.name = "rtt N=" + std::to_string(N) + z_str(z);
    id.ref = "R12(x,y) T1(x) T2(y) = T2(y) T1(x) R12(x,y)";
    id.arity = 2;
    id.degree_bound = 2 * n + 1;
    id.at_pole = [z](const Point& p) { return p[0] == p[1] || hits(p[0], z) || hits(p[1], z); };
    id.lhs = [s, t](const Point& p) { return chain({s->R(1, 2, p[0], p[1]), t(1, p[0]), t(2, p[1])}); };
    id.rhs = [s, t](const Point& p) { return chain({t(2, p[1]), t(1, p[0]), s->R(1, 2, p[0], p[1])}); };
    return id;
}

namespace {

// Rtilde_{a,n+o}(x,z_n)...Rtilde_{a,1+o}(x,z_1) R_{a,1+o}(x,z_1)...R_{a,n+o}(x,z_n)
// with module slot k at k+o; `outside` puts the R factors outside instead.
SparseOperator s_image(Slots& s, int aux, int o, const std::vector<Rational>& z, const Rational& x, bool outside) {
    const int n = static_cast<int>(z.size());
    std::vector<SparseOperator> fs;
    if (!outside) {
        for (int k = n; k >= 1; --k) fs.push_back(s.Rt(aux, k + o, x, z[k - 1]));
        for (int k = 1; k <= n; ++k) fs.push_back(s.R(aux, k + o, x, z[k - 1]));
    } else {
        for (int k = n; k >= 1; --k) fs.push_back(s.R(aux, k + o, x, z[k - 1]));
        for (int k = 1; k <= n; ++k) fs.push_back(s.Rt(aux, k + o, x, z[k - 1]));
    }
    return chain(fs);
}

}  // namespace

Identity reflection_identity(const std::vector<Rational>& z, const BilinearForm& form) {
    const int n = static_cast<int>(z.size());
    auto s = std::make_shared<Slots>(form, n + 2);
    Identity id;
    id.name = "reflection N=" + std::to_string(form.N) + z_str(z);
    id.ref = "R12(x,y) S1(x) Rt12(x,y) S2(y) = S2(y) Rt12(x,y) S1(x) R12(x,y)";
    id.arity = 2;
    id.degree_bound = 4 * n + 2;
    const auto nz = negated(z);
    id.at_pole = [z, nz](const Point& p) {
        return p[0] == p[1] || (p[0] + p[1]).is_zero() || hits(p[0], z) || hits(p[1], z) || hits(p[0], nz) ||
               hits(p[1], nz);
    };
    id.lhs = [s, z](const Point& p) {
        return chain({s->R(1, 2, p[0], p[1]), s_image(*s, 1, 2, z, p[0], false), s->Rt(1, 2, p[0], p[1]),
                      s_image(*s, 2, 2, z, p[1], false)});
    };
    id.rhs = [s, z](const Point& p) {
        return chain({s_image(*s, 2, 2, z, p[1], false), s->Rt(1, 2, p[0], p[1]), s_image(*s, 1, 2, z, p[0], false),
                      s->R(1, 2, p[0], p[1])});
    };
    return id;
}

Identity image_coincidence_identity(const std::vector<Rational>& z, const BilinearForm& form) {
    const int n = static_cast<int>(z.size());
    auto s = std::make_shared<Slots>(form, n + 1);
    Identity id;
    id.name = "image-coincidence N=" + std::to_string(form.N) + z_str(z);
    id.ref = "Rt...Rt R...R = R...R Rt...Rt on V(z_1) (x) ... (x) V(z_n)";
    id.arity = 1;
    id.degree_bound = 2 * n;
    const auto nz = negated(z);
    id.at_pole = [z, nz](const Point& p) { return hits(p[0], z) || hits(p[0], nz); };
    id.lhs = [s, z](const Point& p) { return s_image(*s, 1, 1, z, p[0], false); };
    id.rhs = [s, z](const Point& p) { return s_image(*s, 1, 1, z, p[0], true); };
    return id;
}

Identity intertwiner_e_identity(const StandardTableau& O, int N, const Rational& shift) {
    const int n = O.n();
    auto s = std::make_shared<Slots>(BilinearForm::symmetric(N), n + 1);
    std::vector<Rational> z;
    for (int c : O.contents()) z.push_back(Rational(c) + shift);
    SparseOperator ep0 = s->lift(product(e_operator(O, N), perm_op(Permutation::reversal(n), N)));
    Identity id;
    id.name = "intertwiner-E " + O.str() + " N=" + std::to_string(N);
    id.ref = "R12(x,z1)...R1,n+1(x,zn) (1 x E P0) = (1 x E P0) R12(x,zn)...R1,n+1(x,z1)";
    id.arity = 1;
    id.degree_bound = n;
    id.at_pole = [z](const Point& p) { return hits(p[0], z); };
    id.lhs = [s, z, ep0, n](const Point& p) {
        std::vector<SparseOperator> fs;
        for (int k = 1; k <= n; ++k) fs.push_back(s->R(1, k + 1, p[0], z[k - 1]));
        fs.push_back(ep0);
        return chain(fs);
    };
    id.rhs = [s, z, ep0, n](const Point& p) {
        std::vector<SparseOperator> fs{ep0};
        for (int k = 1; k <= n; ++k) fs.push_back(s->R(1, k + 1, p[0], z[n - k]));
        return chain(fs);
    };
    return id;
}

std::vector<Rational> shifted_contents(const FusionConfig& cfg) {
    std::vector<Rational> d;
    for (int c : cfg.tableau.contents()) d.push_back(Rational(c) + Rational(cfg.M, 2) + cfg.base_point());
    return d;
}

Identity intertwiner_f_identity(const FusionConfig& cfg) {
    const int n = cfg.n();
    auto s = std::make_shared<Slots>(cfg.form(), n + 1);
    const auto d = shifted_contents(cfg);
    SparseOperator f = s->lift(f_operator_general(cfg));
    Identity id;
    id.name = "intertwiner-F " + cfg.str();
    id.ref = "Rt...Rt R...R (1 x F) = (1 x F) R...R Rt...Rt at z = d";
    id.arity = 1;
    id.degree_bound = 2 * n;
    const auto nd = negated(d);
    id.at_pole = [d, nd](const Point& p) { return hits(p[0], d) || hits(p[0], nd); };
    id.lhs = [s, d, f](const Point& p) { return product(s_image(*s, 1, 1, d, p[0], false), f); };
    id.rhs = [s, d, f](const Point& p) { return product(f, s_image(*s, 1, 1, d, p[0], true)); };
    return id;
}

Identity content_product_identity(const StandardTableau& L, int N) {
    if (!L.shape().is_straight()) throw SkewShapeError("content product identity needs a straight shape");
    const int l = L.n();
    auto s = std::make_shared<Slots>(BilinearForm::symmetric(N), l + 1);
    std::vector<Rational> c;
    for (int v : L.contents()) c.push_back(Rational(v));
    SparseOperator e = s->lift(e_operator(L, N));
    SparseOperator psum(s->id().rows(), s->id().cols());
    for (int k = 1; k <= l; ++k) psum = plus(psum, s->P(1, k + 1));
    Identity id;
    id.name = "content-product " + L.str() + " N=" + std::to_string(N);
    id.ref = "R12(x,c1)...R1,l+1(x,cl) (1 x E) = (1 - sum_k P1,k+1/x) (1 x E)";
    id.arity = 1;
    id.degree_bound = l + 1;
    id.at_pole = [c](const Point& p) { return p[0].is_zero() || hits(p[0], c); };
    id.lhs = [s, c, e, l](const Point& p) {
        std::vector<SparseOperator> fs;
        for (int k = 1; k <= l; ++k) fs.push_back(s->R(1, k + 1, p[0], c[k - 1]));
        fs.push_back(e);
        return chain(fs);
    };
    id.rhs = [s, e, psum](const Point& p) { return product(minus(s->id(), scaled(psum, inverse(p[0]))), e); };
    return id;
}

Identity twisted_content_identity(const FusionConfig& cfg) {
    if (cfg.M != 0 || !cfg.tableau.shape().is_straight())
        throw NotApplicable("twisted content identity needs M = 0 and a straight shape");
    const int l = cfg.n();
    auto s = std::make_shared<Slots>(cfg.form(), l + 1);
    const auto d = shifted_contents(cfg);
    SparseOperator f = s->lift(f_operator_general(cfg));
    SparseOperator sum(s->id().rows(), s->id().cols());
    for (int k = 1; k <= l; ++k) sum = plus(sum, minus(s->P(1, k + 1), s->Q(1, k + 1)));
    // x + 1/2 for symmetric forms, x - 1/2 for alternating ones
    const Rational half = -cfg.base_point();
    Identity id;
    id.name = "twisted-content " + cfg.str();
    id.ref = "Rt...Rt R...R (1 x F) = (1 - sum_k (P - Q)1,k+1/(x +- 1/2)) (1 x F)";
    id.arity = 1;
    id.degree_bound = 2 * l + 1;
    const auto nd = negated(d);
    id.at_pole = [d, nd, half](const Point& p) { return hits(p[0], d) || hits(p[0], nd) || (p[0] + half).is_zero(); };
    id.lhs = [s, d, f](const Point& p) { return product(s_image(*s, 1, 1, d, p[0], false), f); };
    id.rhs = [s, f, sum, half](const Point& p) {
        return product(minus(s->id(), scaled(sum, inverse(p[0] + half))), f);
    };
    return id;
}

Rational g_mu(const Partition& mu, const Rational& x) {
    Rational g(1);
    for (int k = 1; k <= mu.length(); ++k) {
        const Rational K(k), m(mu[k]);
        Rational den = (x - m + K - Rational(1)) * (x + K);
        g *= (x - m + K) * (x + K - Rational(1)) * pole_guard(den, "g_mu");
    }
    return g;
}

Rational h_of(const StandardTableau& T, const Rational& x) {
    Rational h(1);
    for (int c : T.contents()) {
        Rational d = x - Rational(c);
        h *= (d * d - Rational(1)) * pole_guard(d * d, "h");
    }
    return h;
}

Rational h_of(const Partition& mu, const Rational& x) { return h_of(row_tableau(skew(mu)), x); }

Identity g_h_identity(const StandardTableau& T) {
    if (!T.shape().is_straight()) throw SkewShapeError("g_mu h needs a straight shape");
    const Partition mu = T.shape().lambda();
    std::vector<Rational> bad;
    for (int c : T.contents()) bad.push_back(Rational(c));
    for (int k = 1; k <= mu.length(); ++k) {
        bad.push_back(Rational(mu[k] - k + 1));
        bad.push_back(Rational(-k));
    }
    auto one = [](const Rational& v) {
        SparseOperator a(1, 1);
        if (!v.is_zero()) a.insert(0, 0) = v;
        return a;
    };
    Identity id;
    id.name = "g-h-inverse " + T.str();
    id.ref = "g_mu(x) h(x) = 1";
    id.arity = 1;
    id.degree_bound = std::max(4, 2 * mu.length() + 2 * mu.size());
    id.at_pole = [bad](const Point& p) { return hits(p[0], bad); };
    id.lhs = [mu, T, one](const Point& p) { return one(g_mu(mu, p[0]) * h_of(T, p[0])); };
    id.rhs = [one](const Point&) { return one(Rational(1)); };
    return id;
}

}  // namespace fusion
