#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/rmatrix.hpp"

namespace fusion {

// One line of a certificate.
struct Entry {
    std::string name;
    std::string ref;
    bool pass = true;
    // A FATAL entry records an exception that contradicts a proved statement.
    bool fatal = false;
    std::string witness;
    std::optional<long> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> runtime_ms;
};

// What a suite sweeps over. Empty `forms` means every form allowed by parity.
struct Sweep {
    std::vector<int> Ns{2, 3};
    int M = 0;
    std::vector<FormKind> forms;
    int max_boxes = 3;
    std::optional<Partition> lambda;
    std::uint64_t seed = 42;
    bool timing = false;
};

std::vector<FormKind> forms_for(const Sweep& s, int N);

// Straight shapes lambda |- l <= max_boxes (or just s.lambda) with a valid
// label for the group of `kind` in dimension N + M.
std::vector<Partition> labels(const Sweep& s, FormKind kind, int N);

// Every skew tableau with at most max_n boxes: row route, column route and the
// theta extraction from every straight tableau with at most max_l boxes
// extending it agree.
std::vector<Entry> suite_fusion_routes(int max_l, int max_n);
// e^2 = (l!/dim) e, and at M = 0 also F^2 = (l!/dim) F, FE = EF = (l!/dim) F.
std::vector<Entry> suite_idempotency(const Sweep& s);
// M = 0 traceless image checks; configs with N^l > max_dim are skipped.
std::vector<Entry> suite_traceless_image(const Sweep& s, long max_dim = 256);
// Each applicable closed formula equals the general route.
std::vector<Entry> suite_closed_forms(const Sweep& s);
// rank E = number of semistandard tableaux, skew shapes with |lambda| <= max_l.
std::vector<Entry> suite_rank_oracle(int max_l, int max_n, const std::vector<int>& Ns);
// rank F <= rank E.
std::vector<Entry> suite_rank_bound(const Sweep& s);
// Exchange relation for every admissible (tableau, k).
std::vector<Entry> suite_exchange(const Sweep& s);
// Yang-Baxter family, unitarity, tilde/bar inverse and symmetry, certified.
std::vector<Entry> suite_yang_baxter(const Sweep& s);
// RTT (n <= 2), E and F intertwiners (n <= max_boxes), reflection (n <= 2),
// one-slot image coincidence, content identities, certified.
std::vector<Entry> suite_intertwiners(const Sweep& s);
// g_mu h = 1 for mu |- m <= max_boxes with h from two tableaux.
std::vector<Entry> suite_g_h(const Sweep& s);
// Theta compression for the fixed small configs plus the sweep when it fits.
std::vector<Entry> suite_theta(const Sweep& s);

// Suite names accepted by the command line; aliases map to the same runner.
std::vector<std::string> suite_names();
std::string canonical_suite(const std::string& name);
std::vector<Entry> run_suite(const std::string& name, const Sweep& s);

bool all_pass(const std::vector<Entry>& es);

}  // namespace fusion
