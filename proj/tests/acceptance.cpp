#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fusion/suites.hpp"

using namespace fusion;

namespace {

const auto Sym = FormKind::Symmetric;
const auto Alt = FormKind::Alternating;

Sweep sweep(std::vector<int> Ns, FormKind k, int M, int max_boxes) {
    Sweep s;
    s.Ns = std::move(Ns);
    s.forms = {k};
    s.M = M;
    s.max_boxes = max_boxes;
    return s;
}

// sym N in {2,3} and alt N in {2,4}, at M = 0 and at M = 1 (sym) or 2 (alt)
std::vector<Sweep> standard_sweeps(bool with_extra_M) {
    std::vector<Sweep> out{sweep({2, 3}, Sym, 0, 4), sweep({2, 4}, Alt, 0, 4)};
    if (with_extra_M) {
        out.push_back(sweep({2, 3}, Sym, 1, 4));
        out.push_back(sweep({2, 4}, Alt, 2, 4));
    }
    return out;
}

std::vector<Entry> over(const std::vector<Sweep>& ss, const std::function<std::vector<Entry>(const Sweep&)>& f) {
    std::vector<Entry> out;
    for (const auto& s : ss) {
        auto es = f(s);
        out.insert(out.end(), es.begin(), es.end());
    }
    return out;
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<std::vector<Entry>()> run;
    // smallest acceptable number of checks, so an empty sweep cannot pass
    size_t min_checks;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "fusion routes agree on all skew tableaux with n <= 5 (extensions l <= 6)", 60,
         [] { return suite_fusion_routes(6, 5); }, 100},
        {2, "scaled idempotency of E and F, l <= 4", 120,
         [] { return over(standard_sweeps(false), suite_idempotency); }, 40},
        {3, "im F = im E meet traceless and Q F = 0, l <= 4, N^l <= 256", 120,
         [] { return over(standard_sweeps(false), [](const Sweep& s) { return suite_traceless_image(s, 256); }); },
         20},
        {4, "closed formulas agree with the general route", 120,
         [] { return over(standard_sweeps(true), suite_closed_forms); }, 40},
        {5, "rank E = semistandard count, n <= 4, N <= 3", 60,
         [] { return suite_rank_oracle(8, 4, {1, 2, 3}); }, 100},
        {6, "identity certificates: Yang-Baxter family, unitarity, RTT, intertwiners, reflection", 120,
         [] {
             Sweep s;
             s.Ns = {2, 3};
             s.max_boxes = 3;
             auto a = suite_yang_baxter(s);
             auto b = suite_intertwiners(s);
             Sweep s4 = sweep({4}, Alt, 0, 1);
             auto c = suite_yang_baxter(s4);
             a.insert(a.end(), b.begin(), b.end());
             a.insert(a.end(), c.begin(), c.end());
             return a;
         },
         100},
        {7, "g_mu h = 1 with h from two tableaux, |mu| <= 4", 5,
         [] {
             Sweep s;
             s.max_boxes = 4;
             return suite_g_h(s);
         },
         20},
        {8, "exchange relation for every admissible (tableau, k), l <= 4, both forms", 60,
         [] { return over(standard_sweeps(false), suite_exchange); }, 10},
        {9, "theta compression factorizes", 60,
         [] {
             Sweep s;
             s.Ns = {2};
             s.max_boxes = 3;
             return suite_theta(s);
         },
         4},
        {10, "rank F <= rank E across the sweeps of 3 and 4", 120,
         [] { return over(standard_sweeps(true), suite_rank_bound); }, 40},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        auto es = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const Entry* bad = nullptr;
        for (const auto& e : es)
            if (!e.pass) {
                bad = &e;
                break;
            }
        bool ok = !bad && es.size() >= c.min_checks && secs <= c.budget_s;
        std::string note;
        if (bad) note = " first failure: " + bad->name + ": " + bad->witness;
        else if (es.size() < c.min_checks) note = " too few checks";
        else if (secs > c.budget_s) note = " over the time budget";
        std::printf("%s %2d %s (%zu checks, %.2fs)%s\n", ok ? "PASS" : "FAIL", c.id, c.title, es.size(), secs,
                    note.c_str());
        std::fflush(stdout);
        failed += !ok;
    }
    return failed ? 1 : 0;
}
