#include "fusion/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace fusion {

namespace {

std::string form_tag(FormKind k, int N, int M) {
    std::string g = k == FormKind::Symmetric ? "O" : "Sp";
    return g + "_" + std::to_string(N + M) + (M ? " M=" + std::to_string(M) : "");
}

std::string shape_tag(const StandardTableau& T) { return "(" + T.shape().str() + ") [" + T.str() + "]"; }

Entry run_check(const std::string& name, const std::string& ref, bool timing, const std::function<Verdict()>& body) {
    Entry e;
    e.name = name;
    e.ref = ref;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Verdict v = body();
        e.pass = v.pass;
        e.witness = v.witness;
    } catch (const PoleAtLimit& ex) {
        e.pass = false;
        e.fatal = true;
        e.witness = std::string("FATAL PoleAtLimit: ") + ex.what();
    } catch (const Error& ex) {
        e.pass = false;
        e.witness = std::string(ex.kind()) + ": " + ex.what();
    }
    if (timing)
        e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

Entry from_identity(const Identity& id, const Sweep& s) {
    Entry e;
    auto t0 = std::chrono::steady_clock::now();
    try {
        IdentityCheck c = certify(id, s.seed);
        e.name = c.name;
        e.ref = c.ref;
        e.pass = c.pass;
        e.witness = c.witness;
        e.samples = static_cast<long>(c.samples.size());
        e.seed = c.seed;
    } catch (const Error& ex) {
        e.name = id.name;
        e.ref = id.ref;
        e.pass = false;
        e.fatal = dynamic_cast<const PoleAtLimit*>(&ex) != nullptr;
        e.witness = std::string(ex.kind()) + ": " + ex.what();
    }
    if (s.timing)
        e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

Rational factorial(int l) {
    Rational f(1);
    for (int k = 2; k <= l; ++k) f *= Rational(k);
    return f;
}

Rational scalar_of(const Partition& lam) { return factorial(lam.size()) / Rational(hook_length_dim(lam)); }

// Valid straight configs of the sweep, one per (form, N, tableau).
std::vector<FusionConfig> straight_configs(const Sweep& s, int M, long max_dim = 0) {
    std::vector<FusionConfig> out;
    for (int N : s.Ns)
        for (FormKind k : forms_for(s, N)) {
            if (k == FormKind::Alternating && M % 2 != 0) continue;
            for (const auto& lam : labels(Sweep{{N}, M, {k}, s.max_boxes, s.lambda, s.seed, s.timing}, k, N)) {
                if (max_dim && tensor_dim(N + M, lam.size()) > max_dim) continue;
                for (const auto& T : standard_tableaux(skew(lam))) out.emplace_back(T, N, M, k);
            }
        }
    return out;
}

std::string cfg_tag(const FusionConfig& c) { return form_tag(c.kind, c.N, c.M) + " " + shape_tag(c.tableau); }

}  // namespace

std::vector<FormKind> forms_for(const Sweep& s, int N) {
    std::vector<FormKind> want = s.forms;
    if (want.empty()) want = {FormKind::Symmetric, FormKind::Alternating};
    std::vector<FormKind> out;
    for (FormKind k : want)
        if (k == FormKind::Symmetric || (N % 2 == 0 && s.M % 2 == 0)) out.push_back(k);
    return out;
}

std::vector<Partition> labels(const Sweep& s, FormKind kind, int N) {
    const Group g = kind == FormKind::Symmetric ? Group::O : Group::Sp;
    std::vector<Partition> out;
    auto consider = [&](const Partition& p) {
        if (validate_label(p, g, N + s.M)) out.push_back(p);
    };
    if (s.lambda) {
        consider(*s.lambda);
        return out;
    }
    for (int l = 1; l <= s.max_boxes; ++l)
        for (const auto& p : partitions_of(l)) consider(p);
    return out;
}

std::vector<Entry> suite_fusion_routes(int max_l, int max_n) {
    struct Seen {
        StandardTableau omega;
        GroupElementQ row, col;
        std::vector<std::string> bad;
        int extensions = 0;
    };
    std::map<std::string, Seen> seen;
    std::vector<Entry> out;
    auto key = [](const StandardTableau& T) { return T.shape().str() + "|" + T.str(); };
    try {
        for (int l = 1; l <= max_l; ++l)
            for (const auto& lam : partitions_of(l))
                for (const auto& L : standard_tableaux(skew(lam)))
                    for (int m = std::max(0, l - max_n); m < l; ++m) {
                        StandardTableau omega = m == 0 ? L : L.split(m).second;
                        auto it = seen.find(key(omega));
                        if (it == seen.end()) {
                            GroupElementQ row = fusion_e_skew(omega, Mode::Row);
                            GroupElementQ col = fusion_e_skew(omega, Mode::Column);
                            it = seen.emplace(key(omega), Seen{omega, row, col, {}, 0}).first;
                            if (!(row == col)) it->second.bad.push_back("row and column routes differ");
                        }
                        Seen& sn = it->second;
                        ++sn.extensions;
                        if (!(e_skew_extract(L, m) == sn.row))
                            sn.bad.push_back("extraction from [" + L.str() + "] m=" + std::to_string(m) + " differs");
                    }
    } catch (const PoleAtLimit& ex) {
        Entry e;
        e.name = "fusion routes";
        e.ref = "row route = column route = theta extraction from every extending tableau";
        e.pass = false;
        e.fatal = true;
        e.witness = std::string("FATAL PoleAtLimit: ") + ex.what();
        return {e};
    }
    // every skew tableau in range must have been reached
    for (const auto& sh : skew_shapes_up_to(max_l, max_n)) {
        Entry e;
        e.name = "fusion routes (" + sh.str() + ")";
        e.ref = "row route = column route = theta extraction from every extending tableau";
        for (const auto& T : standard_tableaux(sh)) {
            auto it = seen.find(key(T));
            if (it == seen.end()) {
                e.pass = false;
                e.witness = "[" + T.str() + "] not reached by any extension";
                break;
            }
            if (!it->second.bad.empty()) {
                e.pass = false;
                e.witness = "[" + T.str() + "] " + it->second.bad.front();
                break;
            }
        }
        out.push_back(e);
    }
    return out;
}

std::vector<Entry> suite_idempotency(const Sweep& s) {
    std::vector<Entry> out;
    for (const auto& c : straight_configs(s, s.M)) {
        const Rational sc = scalar_of(c.tableau.shape().lambda());
        out.push_back(run_check("idempotency E " + cfg_tag(c), "E^2 = (l!/dim U) E", s.timing, [&] {
            return verify_scaled_idempotent(e_operator(c.tableau, c.N), sc);
        }));
        if (c.M != 0) continue;
        out.push_back(run_check("idempotency F " + cfg_tag(c), "F^2 = (l!/dim U) F", s.timing, [&] {
            return verify_scaled_idempotent(f_operator_general(c), sc);
        }));
        out.push_back(run_check("divisibility " + cfg_tag(c), "F E = E F = (l!/dim U) F", s.timing, [&] {
            return verify_divisibility(f_operator_general(c), e_operator(c.tableau, c.N), sc);
        }));
    }
    return out;
}

std::vector<Entry> suite_traceless_image(const Sweep& s, long max_dim) {
    std::vector<Entry> out;
    for (const auto& c : straight_configs(s, 0, max_dim))
        out.push_back(run_check("traceless image " + cfg_tag(c),
                                "im F = im E meet traceless; Q_kl F = 0; F = E on traceless tensors", s.timing,
                                [&] { return verify_traceless_image(c); }));
    return out;
}

std::vector<Entry> suite_closed_forms(const Sweep& s) {
    std::vector<Entry> out;
    for (const auto& c : straight_configs(s, s.M)) {
        std::optional<SparseOperator> general;
        for (ClosedFormula f : all_formulas()) {
            if (!applicable(c, f)) continue;
            out.push_back(run_check(std::string("closed form ") + formula_name(f) + " " + cfg_tag(c),
                                    "closed product formula = general F", s.timing, [&] {
                                        if (!general) general = f_operator_general(c);
                                        if (equal_op(f_operator_closed(c, f), *general)) return Verdict::ok();
                                        return Verdict::fail("operators differ");
                                    }));
        }
    }
    return out;
}

std::vector<Entry> suite_rank_oracle(int max_l, int max_n, const std::vector<int>& Ns) {
    std::vector<Entry> out;
    for (const auto& sh : skew_shapes_up_to(max_l, max_n))
        for (int N : Ns) {
            const auto T = row_tableau(sh);
            out.push_back(run_check("rank E (" + sh.str() + ") N=" + std::to_string(N),
                                    "rank E = number of semistandard tableaux with entries <= N", false, [&] {
                                        long r = rank(e_operator(T, N));
                                        long c = count_semistandard(sh, N);
                                        if (r == c) return Verdict::ok();
                                        return Verdict::fail("rank " + std::to_string(r) + " vs " + std::to_string(c));
                                    }));
        }
    return out;
}

std::vector<Entry> suite_rank_bound(const Sweep& s) {
    std::vector<Entry> out;
    for (const auto& c : straight_configs(s, s.M))
        out.push_back(run_check("rank bound " + cfg_tag(c), "rank F <= rank E", s.timing,
                                [&] { return verify_rank_bound(c); }));
    return out;
}

std::vector<Entry> suite_exchange(const Sweep& s) {
    std::vector<Entry> out;
    for (const auto& c : straight_configs(s, s.M))
        for (int k = 1; k < c.n(); ++k) {
            if (!c.tableau.swap_adjacent(k)) continue;
            out.push_back(run_check("exchange k=" + std::to_string(k) + " " + cfg_tag(c),
                                    "P R(c_k+1,c_k) F_L = F_(s_k L) R(c_k,c_k+1) P", s.timing,
                                    [&] { return verify_exchange(c, k); }));
        }
    return out;
}

std::vector<Entry> suite_yang_baxter(const Sweep& s) {
    std::vector<Entry> out;
    for (int N : s.Ns) {
        for (FormKind k : forms_for(s, N)) {
            auto form = BilinearForm::standard(k, N);
            for (auto w : {YBKind::Plain, YBKind::Tilde, YBKind::Bar, YBKind::Mixed}) {
                if (w == YBKind::Plain && k == FormKind::Alternating) continue;
                Entry e = from_identity(yang_baxter_identity(w, form), s);
                if (w != YBKind::Plain) e.name += k == FormKind::Symmetric ? " O" : " Sp";
                out.push_back(e);
            }
            for (auto id : {tilde_bar_identity(form), tilde_symmetry_identity(form), bar_symmetry_identity(form)}) {
                Entry e = from_identity(id, s);
                e.name += k == FormKind::Symmetric ? " O" : " Sp";
                out.push_back(e);
            }
        }
        out.push_back(from_identity(r_unitarity_identity(N), s));
    }
    return out;
}

std::vector<Entry> suite_intertwiners(const Sweep& s) {
    std::vector<Entry> out;
    const std::vector<std::vector<Rational>> zs{{Rational(0)}, {Rational(0), Rational(1)}, {Rational(-1), Rational(1)}};
    for (int N : s.Ns) {
        for (const auto& z : zs) out.push_back(from_identity(rtt_identity(z, N), s));
        for (const auto& sh : skew_shapes_up_to(s.max_boxes + 1, s.max_boxes)) {
            if (tensor_dim(N, sh.n() + 1) > max_dim()) continue;
            for (const auto& T : standard_tableaux(sh)) {
                Entry e = from_identity(intertwiner_e_identity(T, N, 0), s);
                e.name += " (" + sh.str() + ")";
                out.push_back(e);
            }
        }
        for (FormKind k : forms_for(s, N)) {
            auto form = BilinearForm::standard(k, N);
            const std::string g = k == FormKind::Symmetric ? " O" : " Sp";
            for (const auto& z : zs) {
                Entry e = from_identity(reflection_identity(z, form), s);
                e.name += g;
                out.push_back(e);
            }
            Entry e = from_identity(image_coincidence_identity({Rational(0)}, form), s);
            e.name += g;
            out.push_back(e);
        }
        for (FormKind k : forms_for(s, N))
            for (int M : {0, s.M > 0 ? s.M : (k == FormKind::Symmetric ? 1 : 2)}) {
                if (k == FormKind::Alternating && M % 2) continue;
                for (const auto& sh : skew_shapes_up_to(s.max_boxes + 2, s.max_boxes)) {
                    if (s.lambda && sh.lambda() != *s.lambda) continue;
                    if (tensor_dim(N, sh.n() + 1) > max_dim()) continue;
                    for (const auto& T : standard_tableaux(sh)) {
                        std::optional<FusionConfig> c;
                        try {
                            c.emplace(T, N, M, k);
                        } catch (const InvalidLabel&) {
                            break;
                        }
                        auto tagged = [&](Entry e) {
                            e.name += " (" + sh.str() + ")";
                            out.push_back(std::move(e));
                        };
                        tagged(from_identity(intertwiner_f_identity(*c), s));
                        if (M == 0 && sh.is_straight()) {
                            tagged(from_identity(twisted_content_identity(*c), s));
                            if (k == FormKind::Symmetric) tagged(from_identity(content_product_identity(T, N), s));
                        }
                    }
                }
            }
    }
    return out;
}

std::vector<Entry> suite_g_h(const Sweep& s) {
    std::vector<Entry> out;
    for (int m = 1; m <= s.max_boxes; ++m)
        for (const auto& mu : partitions_of(m)) {
            const auto r = row_tableau(skew(mu)), c = column_tableau(skew(mu));
            Entry e = from_identity(g_h_identity(r), s);
            e.name = "g h = 1 (" + mu.str() + ")";
            out.push_back(e);
            Identity same;
            same.name = "h independent of the tableau (" + mu.str() + ")";
            same.ref = "h from the row tableau = h from the column tableau";
            same.arity = 1;
            same.degree_bound = 4 * m;
            std::set<Rational> bad;
            for (int v : r.contents()) bad.insert(Rational(v));
            same.at_pole = [bad](const Point& p) { return bad.count(p[0]) > 0; };
            auto one = [](const Rational& v) {
                SparseOperator a(1, 1);
                if (!v.is_zero()) a.insert(0, 0) = v;
                return a;
            };
            same.lhs = [r, one](const Point& p) { return one(h_of(r, p[0])); };
            same.rhs = [c, one](const Point& p) { return one(h_of(c, p[0])); };
            out.push_back(from_identity(same, s));
        }
    return out;
}

std::vector<Entry> suite_theta(const Sweep& s) {
    std::vector<Entry> out;
    const std::string ref = "compression of F_L to traceless C^M slots = E_Upsilon (x) F_Omega(M)";
    auto add = [&](const StandardTableau& L, int m, int N, int M, FormKind k) {
        out.push_back(run_check("theta m=" + std::to_string(m) + " " + form_tag(k, N, M) + " " + shape_tag(L), ref,
                                s.timing, [&] { return verify_theta_factorization(L, m, N, M, k); }));
    };
    add(row_tableau(skew(Partition({2}))), 1, 2, 1, FormKind::Symmetric);
    for (const auto& T : standard_tableaux(skew(Partition({2, 1})))) add(T, 1, 2, 2, FormKind::Symmetric);
    for (int N : s.Ns)
        for (FormKind k : forms_for(s, N)) {
            const int M = s.M > 0 ? s.M : (k == FormKind::Symmetric ? 1 : 2);
            if (k == FormKind::Alternating && M % 2) continue;
            for (const auto& c : straight_configs(Sweep{{N}, M, {k}, s.max_boxes, s.lambda, s.seed, s.timing}, M)) {
                if (tensor_dim(N + M, c.n()) > 1000) continue;
                for (int m = 1; m < c.n(); ++m) {
                    auto ups = c.tableau.split(m).first;
                    if (!validate_label(ups.shape().lambda(), c.group(), M)) continue;
                    add(c.tableau, m, N, M, k);
                }
            }
        }
    return out;
}

std::vector<std::string> suite_names() {
    return {"fusion-routes", "idempotency",     "traceless-image", "closed-forms", "rank-oracle",
            "rank-bound",    "exchange",        "yang-baxter",     "intertwiners", "g-h",
            "theta-factorization"};
}

std::string canonical_suite(const std::string& name) {
    static const std::map<std::string, std::string> alias{
        {"prop33", "traceless-image"}, {"corollary32", "exchange"}, {"lemma44", "g-h"}};
    if (auto it = alias.find(name); it != alias.end()) return it->second;
    for (const auto& n : suite_names())
        if (n == name) return n;
    throw ParseError("unknown suite '" + name + "'");
}

std::vector<Entry> run_suite(const std::string& name, const Sweep& s) {
    const std::string n = canonical_suite(name);
    if (n == "fusion-routes") return suite_fusion_routes(s.max_boxes + 1, s.max_boxes);
    if (n == "idempotency") return suite_idempotency(s);
    if (n == "traceless-image") return suite_traceless_image(s);
    if (n == "closed-forms") return suite_closed_forms(s);
    if (n == "rank-oracle") return suite_rank_oracle(s.max_boxes + 2, s.max_boxes, s.Ns);
    if (n == "rank-bound") return suite_rank_bound(s);
    if (n == "exchange") return suite_exchange(s);
    if (n == "yang-baxter") return suite_yang_baxter(s);
    if (n == "intertwiners") return suite_intertwiners(s);
    if (n == "g-h") return suite_g_h(s);
    return suite_theta(s);
}

bool all_pass(const std::vector<Entry>& es) {
    for (const auto& e : es)
        if (!e.pass) return false;
    return true;
}

}  // namespace fusion
