#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fusion/certificate.hpp"

using namespace fusion;

namespace {

struct RunConfig {
    std::string lambda;
    std::string mu;
    std::vector<int> Ns;
    int M = 0;
    std::string form;
    std::string tableau = "row";
    std::vector<std::string> suites;
    std::uint64_t seed = 42;
    int max_boxes = 3;
    std::string output;
    std::string formula;
    bool timing = false;
    bool quiet = false;
};

std::string join(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

SkewShape shape_of(const RunConfig& rc) {
    if (rc.lambda.empty()) throw ParseError("--lambda is required");
    return skew(Partition::parse(rc.lambda), Partition::parse(rc.mu));
}

StandardTableau pick_tableau(const SkewShape& sh, const std::string& which) {
    if (which == "row") return row_tableau(sh);
    if (which == "col") return column_tableau(sh);
    auto all = standard_tableaux(sh);
    long k = 0;
    try {
        size_t used = 0;
        k = std::stol(which, &used);
        if (used != which.size()) throw ParseError("");
    } catch (...) {
        throw ParseError("--tableau must be row, col or an index, got '" + which + "'");
    }
    if (k < 1 || k > static_cast<long>(all.size()))
        throw IndexError("tableau index " + which + " out of range 1.." + std::to_string(all.size()));
    return all[k - 1];
}

FormKind form_of(const std::string& f) {
    if (f == "O") return FormKind::Symmetric;
    if (f == "Sp") return FormKind::Alternating;
    throw ParseError("--form must be O or Sp, got '" + f + "'");
}

int single_N(const RunConfig& rc) {
    if (rc.Ns.size() != 1) throw ParseError("give exactly one --N");
    return rc.Ns.front();
}

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path == "-") {
        std::cout << dump_certificate(j);
        return;
    }
    std::ofstream os(path);
    if (!os) throw ParseError("cannot write " + path);
    os << dump_certificate(j);
}

void print_operator(const SparseOperator& a) {
    auto j = operator_json(a);
    std::cout << "dim " << a.rows() << "\nhash " << j["hash"].get<std::string>() << "\nnonzeros "
              << j["entries"].size() << "\n";
    for (const auto& e : j["entries"])
        std::cout << "  (" << e[0].get<long>() << "," << e[1].get<long>() << ") " << e[2].get<std::string>() << "\n";
}

int cmd_tableaux(const RunConfig& rc) {
    const SkewShape sh = shape_of(rc);
    const auto all = standard_tableaux(sh);
    std::cout << "shape " << sh.str() << "\nboxes " << sh.n() << "\nstandard tableaux " << all.size() << "\n";
    std::cout << "row tableau contents " << join(row_tableau(sh).contents()) << "\n";
    std::cout << "column tableau contents " << join(column_tableau(sh).contents()) << "\n";
    for (size_t k = 0; k < all.size(); ++k)
        std::cout << k + 1 << ": " << all[k].str() << "  contents " << join(all[k].contents()) << "\n";
    return 0;
}

int cmd_symmetrizer(const RunConfig& rc) {
    const SkewShape sh = shape_of(rc);
    const StandardTableau T = pick_tableau(sh, rc.tableau);
    GroupElementQ e = sh.is_straight() ? e_element(T) : fusion_e_skew(T, Mode::Row);
    if (!sh.is_straight() && !(fusion_e_skew(T, Mode::Column) == e))
        throw PoleAtLimit("row and column routes disagree for " + T.str());
    std::cout << "tableau " << T.str() << "\ncontents " << join(T.contents()) << "\nterms " << e.size() << "\n"
              << e.str() << "\n";
    if (!rc.Ns.empty()) {
        const int N = single_N(rc);
        SparseOperator E = e_operator(T, N);
        std::cout << "rank " << rank(E) << " on (C^" << N << ")^" << T.n() << "\n";
        if (!rc.quiet) print_operator(E);
    }
    return 0;
}

int cmd_fusion_f(const RunConfig& rc) {
    const SkewShape sh = shape_of(rc);
    if (rc.form.empty()) throw ParseError("--form is required");
    FusionConfig cfg(pick_tableau(sh, rc.tableau), single_N(rc), rc.M, form_of(rc.form));
    nlohmann::json out;
    out["config"] = {{"form", rc.form}, {"N", cfg.N}, {"M", cfg.M}, {"lambda", sh.lambda().str()},
                     {"mu", sh.mu().str()}, {"tableau", cfg.tableau.str()}};
    SparseOperator F;
    try {
        F = rc.formula.empty() ? f_operator_general(cfg) : f_operator_closed(cfg, parse_formula(rc.formula));
    } catch (const PoleAtLimit& e) {
        std::cout << "FATAL PoleAtLimit: " << e.what() << "\n";
        out["fatal"] = std::string("PoleAtLimit: ") + e.what();
        if (!rc.output.empty()) write_json(rc.output, out);
        return 1;
    }
    const long r = rank(F);
    std::cout << "config " << cfg.str() << "\nroute " << (rc.formula.empty() ? "general" : rc.formula) << "\nrank "
              << r << "\n";
    if (!rc.quiet) print_operator(F);
    out["rank"] = r;
    out["operator"] = operator_json(F);
    if (!rc.output.empty()) write_json(rc.output, out);
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    Sweep s;
    if (!rc.Ns.empty()) s.Ns = rc.Ns;
    s.M = rc.M;
    s.max_boxes = rc.max_boxes;
    s.seed = rc.seed;
    s.timing = rc.timing;
    if (!rc.form.empty()) s.forms = {form_of(rc.form)};
    for (int N : s.Ns) {
        if (N < 1) throw InvalidLabel("N must be positive");
        if (rc.form == "Sp" && (N % 2 || rc.M % 2))
            throw ParityError("Sp needs even N and M, got N=" + std::to_string(N) + " M=" + std::to_string(rc.M));
    }
    if (rc.M < 0) throw InvalidLabel("M must be nonnegative");
    if (s.max_boxes < 1) throw ParseError("--max-boxes must be positive");
    if (!rc.lambda.empty()) {
        s.lambda = Partition::parse(rc.lambda);
        for (int N : s.Ns)
            for (FormKind k : forms_for(s, N))
                if (labels(s, k, N).empty())
                    throw InvalidLabel(s.lambda->str() + " is not a label for " +
                                       (k == FormKind::Symmetric ? "O_" : "Sp_") + std::to_string(N + s.M));
    }
    std::vector<std::string> suites = rc.suites;
    if (suites.empty()) suites = suite_names();
    for (auto& n : suites) n = canonical_suite(n);

    std::vector<Entry> entries;
    for (const auto& n : suites) {
        auto es = run_suite(n, s);
        long failed = 0;
        for (const auto& e : es) failed += !e.pass;
        std::cout << n << ": " << es.size() - failed << "/" << es.size() << " passed\n";
        for (const auto& e : es)
            if (!e.pass) std::cout << "  FAIL " << e.name << ": " << e.witness << "\n";
        entries.insert(entries.end(), es.begin(), es.end());
    }
    nlohmann::json config = {{"command", "verify"}, {"N", s.Ns},         {"M", s.M},
                             {"form", rc.form.empty() ? "all" : rc.form},  {"max_boxes", s.max_boxes},
                             {"seed", s.seed},          {"suites", suites}, {"lambda", rc.lambda}};
    const bool ok = all_pass(entries);
    write_json(rc.output.empty() ? "fusion-certificate.json" : rc.output, certificate(config, entries));
    std::cout << (ok ? "PASS" : "FAIL") << " " << entries.size() << " checks\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusion procedure constructions and checks"};
    app.require_subcommand(1);
    RunConfig rc;
    auto shape_opts = [&rc](CLI::App* c) {
        c->add_option("--lambda", rc.lambda, "outer partition, comma list");
        c->add_option("--mu", rc.mu, "inner partition, comma list");
    };
    auto* tab = app.add_subcommand("tableaux", "list standard tableaux and contents");
    shape_opts(tab);
    auto* sym = app.add_subcommand("symmetrizer", "e_Omega and optionally its operator on (C^N)^n");
    shape_opts(sym);
    sym->add_option("--tableau", rc.tableau, "row, col or 1-based index")->capture_default_str();
    sym->add_option("--N", rc.Ns, "dimension")->expected(1);
    sym->add_flag("--quiet", rc.quiet, "omit operator entries");
    auto* ff = app.add_subcommand("fusion-f", "the operator F_Omega(M)");
    shape_opts(ff);
    ff->add_option("--tableau", rc.tableau, "row, col or 1-based index")->capture_default_str();
    ff->add_option("--N", rc.Ns, "dimension")->expected(1)->required();
    ff->add_option("--M", rc.M, "extra dimension")->capture_default_str();
    ff->add_option("--form", rc.form, "O or Sp")->required();
    ff->add_option("--formula", rc.formula, "closed formula: col_O, row_Sp, any_Sp, any_SO, regular_case");
    ff->add_option("--output", rc.output, "JSON output path, - for stdout");
    ff->add_flag("--quiet", rc.quiet, "omit operator entries");
    auto* ver = app.add_subcommand("verify", "run check suites and write a JSON certificate");
    ver->add_option("--lambda", rc.lambda, "restrict sweeps to this partition");
    ver->add_option("--N", rc.Ns, "dimensions (default 2,3)")->delimiter(',');
    ver->add_option("--M", rc.M, "extra dimension")->capture_default_str();
    ver->add_option("--form", rc.form, "O or Sp (default both where parity allows)");
    ver->add_option("--suite", rc.suites, "suite names, comma list (default all)")->delimiter(',');
    ver->add_option("--seed", rc.seed, "sampling seed")->capture_default_str();
    ver->add_option("--max-boxes", rc.max_boxes, "largest l in sweeps")->capture_default_str();
    ver->add_option("--output", rc.output, "certificate path, - for stdout (default fusion-certificate.json)");
    ver->add_flag("--timing", rc.timing, "record runtime_ms per entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (*tab) return cmd_tableaux(rc);
        if (*sym) return cmd_symmetrizer(rc);
        if (*ff) return cmd_fusion_f(rc);
        return cmd_verify(rc);
    } catch (const PoleAtLimit& e) {
        std::cerr << "FATAL PoleAtLimit: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return 2;
    }
}
