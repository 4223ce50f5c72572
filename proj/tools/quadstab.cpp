// Command-line front end: every verification in the library as a subcommand,
// with machine-readable output. Exit codes: 0 pass, 1 mathematical mismatch,
// 2 usage error, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadstab/acceptance.hpp"

using namespace quadstab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "plain"; // plain | json | csv
    long threads = 0;             // 0: take QUADSTAB_THREADS or 1
    unsigned long seed = 12345;
    long cap = kDefaultBlockCap;

    long effective_threads() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("QUADSTAB_THREADS")) {
            long t = std::atol(env);
            if (t > 0) return t;
        }
        return 1;
    }
};

ordered_json checks_json(const std::vector<Check>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
        arr.push_back({{"anchor", c.anchor}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    return arr;
}

// prints the report in the selected format and turns failed checks into the
// exit code
int emit(const Options& opt, const std::string& command, const ordered_json& config, const ordered_json& results,
         const std::vector<Check>& checks, const std::string& plain_text, const std::string& csv_text = "") {
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    if (opt.format == "json") {
        ordered_json out;
        out["schema_version"] = 1;
        out["command"] = command;
        out["config"] = config;
        out["results"] = results;
        out["checks"] = checks_json(checks);
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        if (!csv_text.empty()) {
            std::cout << csv_text;
        } else {
            std::cout << "anchor,expected,got,pass\n";
            for (const auto& c : checks) {
                std::cout << '"' << c.anchor << "\",\"" << c.expected << "\",\"" << c.got << "\","
                          << (c.pass ? "true" : "false") << "\n";
            }
        }
    } else {
        std::cout << plain_text;
        for (const auto& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.anchor
                      << (c.pass ? "" : "  expected " + c.expected + ", got " + c.got) << "\n";
    }
    return pass ? 0 : 1;
}

std::string homology_lines(const HomologyResult& h, const std::string& symbol) {
    std::ostringstream os;
    for (long d = h.min_degree; d <= h.max_degree(); ++d)
        os << symbol << "_" << d << " = " << h.group_string(d) << "\n";
    return os.str();
}

ordered_json homology_json(const HomologyResult& h) {
    ordered_json arr = ordered_json::array();
    for (long d = h.min_degree; d <= h.max_degree(); ++d)
        arr.push_back({{"degree", d}, {"group", h.group_string(d)}, {"rank", h.at(d).free_rank}});
    return arr;
}

ordered_json tor_json(const TorTable& t) {
    ordered_json arr = ordered_json::array();
    for (long n = 0; n <= t.max_n; ++n) {
        ordered_json row = ordered_json::array();
        for (long d = 0; d <= t.max_d; ++d) row.push_back(t.dim(n, d));
        arr.push_back(row);
    }
    return arr;
}

std::string homology_csv(const HomologyResult& h) {
    std::ostringstream os;
    os << "degree,group,rank\n";
    for (long d = h.min_degree; d <= h.max_degree(); ++d)
        os << d << ",\"" << h.group_string(d) << "\"," << h.at(d).free_rank << "\n";
    return os.str();
}

std::string tor_csv(const TorTable& t) {
    std::ostringstream os;
    os << "n,d,dim\n";
    for (long n = 0; n <= t.max_n; ++n)
        for (long d = 0; d <= t.max_d; ++d) os << n << "," << d << "," << t.dim(n, d) << "\n";
    return os.str();
}

std::string tor_plain(const TorTable& t) {
    std::ostringstream os;
    os << "dim Tor_{n,d} (rows n = 0.." << t.max_n << ", cols d = 0.." << t.max_d << ")\n";
    for (long n = 0; n <= t.max_n; ++n) {
        os << "n=" << std::setw(2) << n << ":";
        for (long d = 0; d <= t.max_d; ++d) os << " " << std::setw(4) << t.dim(n, d);
        os << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GradedModulePresentation builtin_module(const std::string& name) {
    if (name == "example") return example_module_presentation();
    if (name == "a-mod-sigma") return quotient_by_sigma_presentation();
    if (name == "free") return free_module_presentation();
    throw std::invalid_argument("unknown builtin module '" + name + "' (use example, a-mod-sigma, free)");
}

int cmd_koszul(const Options& opt, const std::string& group, const std::string& field, long N, long D) {
    APAlgebra alg(FiniteAbelianGroup::parse(group), CoefficientDomain::parse(field));
    TorTable t = bar_tor_trivial(alg, N, D < 0 ? N : D);
    std::vector<Check> checks;
    detail::check_true(checks,
                       "koszul offdiagonal vanishing P=" + group + " k=" + field + " n<=" + std::to_string(N),
                       is_koszul_window(t));
    ordered_json cfg = {{"group", group}, {"field", field}, {"max", N}, {"dmax", t.max_d}};
    return emit(opt, "koszul", cfg, {{"tor_dims", tor_json(t)}}, checks, tor_plain(t), tor_csv(t));
}

int cmd_tor(const Options& opt, const std::string& group, const std::string& field, const std::string& module_file,
            const std::string& builtin, long N, long D) {
    FiniteAbelianGroup P = FiniteAbelianGroup::parse(group);
    APAlgebra alg(P, CoefficientDomain::parse(field));
    GradedModulePresentation pres =
        module_file.empty() ? builtin_module(builtin) : GradedModulePresentation::parse(read_file(module_file), P);
    if (D < 0) D = 3;

    auto run = [&](auto F) {
        RealizedModule<decltype(F)> M(F, alg, pres, N);
        TorTable t = bar_tor_module(M, N, D);
        ordered_json dims = ordered_json::array();
        for (long n = 0; n <= N; ++n) dims.push_back(M.dim(n));
        ordered_json hnums = ordered_json::array();
        std::ostringstream plain;
        plain << "module dims:";
        for (long n = 0; n <= N; ++n) plain << " " << M.dim(n);
        plain << "\n" << tor_plain(t);
        for (long d = 0; d <= D; ++d) {
            HNumber h = h_number(t, d);
            hnums.push_back({{"d", d}, {"h", h.value.to_string()}, {"window", h.window}});
            plain << "h_" << d << " = " << h.value.to_string() << "  (window " << h.window << ")\n";
        }
        ordered_json cfg = {{"group", group},
                            {"field", field},
                            {"max", N},
                            {"dmax", D},
                            {"module", module_file.empty() ? builtin : module_file}};
        ordered_json results = {{"module_dims", dims}, {"tor_dims", tor_json(t)}, {"h_numbers", hnums}};
        return emit(opt, "tor", cfg, results, {}, plain.str(), tor_csv(t));
    };
    CoefficientDomain dom = CoefficientDomain::parse(field);
    if (dom.kind() == CoefficientDomain::Kind::prime_field) return run(PrimeField(dom.characteristic()));
    if (dom.kind() == CoefficientDomain::Kind::rationals) return run(RationalField());
    throw std::domain_error("tor: ground domain must be a field");
}

int cmd_jw(const Options& opt, long m, long n, const std::string& coeff, bool squarefree) {
    CoefficientDomain dom = CoefficientDomain::parse(coeff);
    std::vector<Check> checks;
    HomologyResult h;
    if (squarefree) {
        auto block = jw_squarefree_block(m, n, opt.cap);
        h = homology(block.complex, dom);
    } else {
        h = jw_homology(m, n, dom, opt.cap, opt.effective_threads());
        if (dom.kind() == CoefficientDomain::Kind::rationals)
            for (long d = 0; d <= n / 2; ++d)
                detail::check_eq(checks,
                                 "partition formula at (m,n,d)=(" + std::to_string(m) + "," + std::to_string(n) +
                                     "," + std::to_string(d) + ")",
                                 partition_formula_dim(m, n, d).get_str(), std::to_string(h.dim(d)));
    }
    ordered_json cfg = {{"m", m}, {"n", n}, {"coeff", coeff}, {"squarefree_block", squarefree}, {"cap", opt.cap}};
    return emit(opt, "jw", cfg, {{"homology", homology_json(h)}}, checks, homology_lines(h, "H"), homology_csv(h));
}

int cmd_dprime(const Options& opt, const std::string& group, long n, const std::string& coeff, bool tensor_check) {
    FiniteAbelianGroup P = FiniteAbelianGroup::parse(group);
    CoefficientDomain dom = CoefficientDomain::parse(coeff);
    HomologyResult h = dprime_homology(P, n, dom, opt.cap, opt.effective_threads());
    std::vector<Check> checks;
    if (tensor_check) {
        auto rep = verify_tensor_decomposition(P, n, opt.cap);
        for (const auto& c : rep.checks)
            detail::check_eq(checks,
                             "tensor factorization at (n,d)=(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")",
                             std::to_string(c.rhs), std::to_string(c.lhs));
    }
    ordered_json cfg = {{"group", group}, {"n", n}, {"coeff", coeff}, {"tensor_check", tensor_check}, {"cap", opt.cap}};
    return emit(opt, "dprime", cfg, {{"homology", homology_json(h)}}, checks, homology_lines(h, "H"), homology_csv(h));
}

int cmd_matching(const Options& opt, long n, const std::string& coeff, bool serialize) {
    auto k = matching_complex(n);
    if (serialize) {
        ordered_json cfg = {{"n", n}, {"serialize", true}};
        return emit(opt, "matching", cfg, {{"complex_text", k.to_text()}}, {}, k.to_text());
    }
    auto h = homology(k.chain_complex(true, opt.cap), CoefficientDomain::parse(coeff));
    ordered_json cfg = {{"n", n}, {"coeff", coeff}};
    return emit(opt, "matching", cfg, {{"reduced_homology", homology_json(h)}}, {}, homology_lines(h, "H~"),
                homology_csv(h));
}

int cmd_poset(const Options& opt, const std::string& kind, long m, long n, long rho, const std::string& group,
              const std::string& coeff, bool serialize) {
    FiniteAbelianGroup P = FiniteAbelianGroup::parse(group);
    CoefficientDomain dom = CoefficientDomain::parse(coeff);
    FinitePoset poset;
    std::vector<Check> checks;
    if (kind == "x") {
        poset = x_poset(m, P);
    } else if (kind == "rbs" || kind == "boundary-rbs") {
        auto r = (kind == "rbs") ? rbs_poset(n, rho, P) : boundary_rbs(n, rho, P);
        poset = r.poset;
    } else {
        throw std::invalid_argument("poset kind must be x, rbs or boundary-rbs");
    }
    if (serialize) {
        ordered_json scfg = {{"kind", kind}, {"m", m}, {"n", n}, {"rho", rho}, {"group", group}, {"serialize", true}};
        return emit(opt, "poset", scfg, {{"poset_text", poset.to_text()}}, {}, poset.to_text());
    }
    auto h = reduced_homology(poset.order_complex(), dom, opt.cap);
    if (kind == "rbs") {
        bool contractible = true;
        for (long d = h.min_degree; d <= h.max_degree(); ++d) contractible = contractible && h.at(d).is_trivial();
        detail::check_true(checks, "terminal object makes " + poset.name() + " contractible", contractible);
    }
    std::ostringstream plain;
    plain << poset.name() << ": " << poset.size() << " elements\n" << homology_lines(h, "H~");
    ordered_json cfg = {{"kind", kind}, {"m", m}, {"n", n}, {"rho", rho}, {"group", group}, {"coeff", coeff}};
    ordered_json results = {{"elements", poset.size()}, {"reduced_homology", homology_json(h)}};
    return emit(opt, "poset", cfg, results, checks, plain.str());
}

int cmd_rbs_check(const Options& opt, long n, long rho, const std::string& group) {
    FiniteAbelianGroup P = FiniteAbelianGroup::parse(group);
    std::vector<Check> checks;
    auto r = rbs_poset(n, rho, P);
    detail::check_true(checks, "one-element list is terminal", r.poset.terminal_element() >= 0);
    auto h = reduced_homology(r.poset.order_complex(), CoefficientDomain::integers(), opt.cap);
    bool contractible = true;
    for (long d = h.min_degree; d <= h.max_degree(); ++d) contractible = contractible && h.at(d).is_trivial();
    detail::check_true(checks, "order complex contractible", contractible);
    if (n >= 2) {
        auto b = boundary_rbs(n, rho, P);
        auto x = x_poset(n - 1, P);
        detail::check_eq(checks, "proper lists vs chains of X_" + std::to_string(n - 1),
                         std::to_string(x.chains().size()), std::to_string(b.elements.size()));
        bool round_trip = true, order_iso = true;
        std::vector<std::vector<std::pair<long, long>>> chains;
        for (const auto& e : b.elements) {
            auto c = rbs_to_sdx(e, P);
            round_trip = round_trip && (sdx_to_rbs(c, n, rho, P) == e);
            chains.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < chains.size(); ++i)
            for (std::size_t j = 0; j < chains.size(); ++j) {
                bool le = b.poset.le(static_cast<long>(i), static_cast<long>(j));
                bool sub = std::includes(chains[i].begin(), chains[i].end(), chains[j].begin(), chains[j].end());
                order_iso = order_iso && (le == sub);
            }
        detail::check_true(checks, "partial-sum round trip", round_trip);
        detail::check_true(checks, "order isomorphism onto subdivision chains", order_iso);
        auto hb = reduced_homology(b.poset.order_complex(), CoefficientDomain::integers(), opt.cap);
        auto hx = reduced_homology(x.order_complex(), CoefficientDomain::integers(), opt.cap);
        bool same = true;
        for (long d = -1; d <= std::max(hb.max_degree(), hx.max_degree()); ++d) same = same && (hb.at(d) == hx.at(d));
        detail::check_true(checks, "boundary poset has the homology of subdivided X", same);
    }
    ordered_json cfg = {{"n", n}, {"rho", rho}, {"group", group}};
    return emit(opt, "rbs-check", cfg, ordered_json::object(), checks, "");
}

int cmd_bounds(const Options& opt, const std::string& flags_str, long t_max, long s_max, long closed_forms_t) {
    Flags flags = Flags::parse(flags_str);
    BoundTable table = propagate(flags, t_max, s_max);
    std::ostringstream plain;
    for (long t = t_max; t >= 0; --t) {
        plain << "t=" << std::setw(2) << t << " |";
        for (long s = 0; s <= s_max; ++s) plain << " " << std::setw(5) << table.at(s, t).to_string();
        plain << "\n";
    }
    plain << "     s:";
    for (long s = 0; s <= s_max; ++s) plain << " " << std::setw(5) << s;
    plain << "\n";

    ordered_json rows = ordered_json::array();
    for (long t = 0; t <= t_max; ++t) {
        ordered_json row = ordered_json::array();
        for (long s = 0; s <= s_max; ++s) row.push_back(table.at(s, t).to_string());
        rows.push_back(row);
    }
    std::vector<Check> checks;
    if (closed_forms_t > 0) {
        auto rep = verify_closed_forms(flags, closed_forms_t);
        detail::check_true(checks,
                           "closed forms hold, flags=" + flags.name() + ", t<=" + std::to_string(closed_forms_t),
                           rep.all_hold);
    }
    std::ostringstream csv;
    csv << "t,s,bound\n";
    for (long t = 0; t <= t_max; ++t)
        for (long s2 = 0; s2 <= s_max; ++s2) csv << t << "," << s2 << "," << table.at(s2, t).to_string() << "\n";
    ordered_json cfg = {{"flags", flags.name()}, {"tmax", t_max}, {"smax", s_max}, {"closed_forms", closed_forms_t}};
    return emit(opt, "bounds", cfg, {{"rows_t_ascending", rows}}, checks, plain.str(), csv.str());
}

int cmd_abelianize(const Options& opt, const std::string& file, const std::string& builtin, bool extend_e,
                   bool verify_matrices) {
    GroupPresentation pres;
    std::vector<Mat2> matrices;
    bool have_matrices = false;
    if (!file.empty()) {
        pres = GroupPresentation::parse(read_file(file));
    } else if (builtin == "swan-sl2" || builtin == "fgt-sl") {
        auto mp = (builtin == "swan-sl2") ? builtin_swan_sl2() : builtin_fgt_sl();
        pres = mp.pres;
        matrices = mp.matrices;
        have_matrices = true;
        if (extend_e) {
            auto action = (builtin == "swan-sl2") ? swan_e_action(pres) : fgt_e_action(pres);
            pres = semidirect_z2(pres, action, Word::one());
        }
    } else {
        throw std::invalid_argument("abelianize needs --file or --builtin swan-sl2|fgt-sl");
    }
    std::vector<Check> checks;
    if (verify_matrices) {
        if (!have_matrices || extend_e)
            throw std::invalid_argument("--verify-matrices applies to the unextended builtins");
        auto rep = verify_relators(pres, matrices);
        for (const auto& c : rep.checks)
            detail::check_true(checks, "relator " + c.relator + " evaluates to the identity", c.pass);
        detail::check_true(checks, "generator determinants all 1", rep.determinants_pass);
    }
    AbelianInvariants ab = abelianize(pres);
    ordered_json cfg = {{"file", file}, {"builtin", builtin}, {"extend_e", extend_e},
                        {"verify_matrices", verify_matrices}};
    return emit(opt, "abelianize", cfg, {{"abelianization", ab.to_string()}}, checks, ab.to_string() + "\n");
}

int cmd_table(const Options& opt, long n_max) {
    auto table = abelianization_table(n_max);
    ordered_json rows = ordered_json::array();
    std::ostringstream plain;
    plain << std::left << std::setw(6) << "rank" << std::setw(10) << "column" << std::setw(28) << "abelianization"
          << "source\n";
    for (const auto& e : table) {
        rows.push_back({{"rank", e.rank}, {"column", e.column}, {"value", e.value.to_string()}, {"source", e.source}});
        plain << std::left << std::setw(6) << e.rank << std::setw(10) << e.column << std::setw(28)
              << e.value.to_string() << e.source << "\n";
    }
    std::vector<Check> checks;
    detail::check_eq(checks, "table rank 2 free column", "Z/2 + Z/2 + Z/2 + Z/2 + Z/2", table[2].value.to_string());
    detail::check_eq(checks, "table rank 2 twisted column", "Z/2 + Z/2 + Z/2", table[3].value.to_string());
    std::ostringstream csv;
    csv << "rank,column,abelianization,source\n";
    for (const auto& e : table)
        csv << e.rank << "," << e.column << ",\"" << e.value.to_string() << "\"," << e.source << "\n";
    ordered_json cfg = {{"nmax", n_max}};
    return emit(opt, "table", cfg, {{"rows", rows}}, checks, plain.str(), csv.str());
}

int cmd_verify_all(const Options& opt) {
    AcceptanceConfig cfg;
    cfg.seed = opt.seed;
    cfg.cap = opt.cap;
    cfg.threads = opt.effective_threads();
    auto criteria = run_all_criteria(cfg);
    ordered_json results = ordered_json::array();
    std::vector<Check> flat;
    std::ostringstream plain;
    for (const auto& cr : criteria) {
        ordered_json entry = {{"number", cr.number}, {"name", cr.name}, {"pass", cr.pass()},
                              {"checks", checks_json(cr.checks)}};
        results.push_back(entry);
        plain << (cr.pass() ? "[PASS]" : "[FAIL]") << " criterion " << cr.number << ": " << cr.name << " ("
              << std::fixed << std::setprecision(2) << cr.elapsed_seconds << "s)\n";
        for (const auto& c : cr.checks) flat.push_back(c);
    }
    ordered_json config = {{"seed", opt.seed}, {"cap", opt.cap}, {"threads", cfg.threads}};
    return emit(opt, "verify-all", config, {{"criteria", results}}, flat, plain.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for graded stability computations"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: plain, json, csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--threads", opt.threads, "worker threads (default: QUADSTAB_THREADS or 1)");
    app.add_option("--seed", opt.seed, "seed for randomized property instances");
    app.add_option("--cap", opt.cap, "basis-size cap per block or complex");

    std::function<int()> run;

    auto* koszul = app.add_subcommand("koszul", "off-diagonal Tor vanishing for A_P");
    static std::string k_group = "Z2", k_field = "Q";
    static long k_N = 6, k_D = -1;
    koszul->add_option("--group", k_group, "finite abelian group, e.g. 1, Z2, Z2xZ2");
    koszul->add_option("--field", k_field, "ground field: Q or Fp");
    koszul->add_option("--max", k_N, "maximum grading");
    koszul->add_option("--dmax", k_D, "maximum homological degree (default: --max)");
    koszul->callback([&]() { run = [&]() { return cmd_koszul(opt, k_group, k_field, k_N, k_D); }; });

    auto* tor = app.add_subcommand("tor", "Tor table of a presented graded module");
    static std::string t_group = "Z2", t_field = "F2", t_module, t_builtin = "example";
    static long t_N = 8, t_D = -1;
    tor->add_option("--group", t_group, "finite abelian group");
    tor->add_option("--field", t_field, "ground field: Q or Fp");
    tor->add_option("--module", t_module, "presentation file");
    tor->add_option("--builtin", t_builtin, "builtin module: example, a-mod-sigma, free");
    tor->add_option("--max", t_N, "realization window N");
    tor->add_option("--dmax", t_D, "maximum homological degree (default 3)");
    tor->callback([&]() { run = [&]() { return cmd_tor(opt, t_group, t_field, t_module, t_builtin, t_N, t_D); }; });

    auto* jw = app.add_subcommand("jw", "homology of the symmetric-square cdga slice");
    static long j_m = 2, j_n = 4;
    static std::string j_coeff = "Q";
    static bool j_squarefree = false;
    jw->add_option("--m", j_m, "number of symmetric generators");
    jw->add_option("--n", j_n, "grading of the slice");
    jw->add_option("--coeff", j_coeff, "coefficients: Z, Q or Fp");
    jw->add_flag("--squarefree-block", j_squarefree, "restrict to the squarefree multiset block (needs m >= n)");
    jw->callback([&]() { run = [&]() { return cmd_jw(opt, j_m, j_n, j_coeff, j_squarefree); }; });

    auto* dprime = app.add_subcommand("dprime", "homology of the D' slice of a finite group");
    static std::string d_group = "Z2", d_coeff = "Q";
    static long d_n = 4;
    static bool d_tensor = false;
    dprime->add_option("--group", d_group, "finite abelian group");
    dprime->add_option("--n", d_n, "grading of the slice");
    dprime->add_option("--coeff", d_coeff, "coefficients: Z, Q or Fp");
    dprime->add_flag("--tensor-check", d_tensor, "verify the free-factor tensor decomposition up to n");
    dprime->callback([&]() { run = [&]() { return cmd_dprime(opt, d_group, d_n, d_coeff, d_tensor); }; });

    auto* matching = app.add_subcommand("matching", "reduced homology of the matching complex M({1..n})");
    static long m_n = 7;
    static std::string m_coeff = "Z";
    matching->add_option("--n", m_n, "number of points");
    matching->add_option("--coeff", m_coeff, "coefficients: Z, Q or Fp");
    static bool m_serialize = false;
    matching->add_flag("--serialize", m_serialize, "print the facet interchange format instead of homology");
    matching->callback([&]() { run = [&]() { return cmd_matching(opt, m_n, m_coeff, m_serialize); }; });

    auto* poset = app.add_subcommand("poset", "order-complex homology of the builtin posets");
    static std::string p_kind = "x", p_group = "Z2", p_coeff = "Z";
    static long p_m = 2, p_n = 3, p_rho = 0;
    poset->add_option("--kind", p_kind, "x, rbs or boundary-rbs");
    poset->add_option("--m", p_m, "layers of the x poset");
    poset->add_option("--n", p_n, "total rank of the list poset");
    poset->add_option("--rho", p_rho, "total class (element index)");
    poset->add_option("--group", p_group, "finite abelian group");
    poset->add_option("--coeff", p_coeff, "coefficients: Z, Q or Fp");
    static bool p_serialize = false;
    poset->add_flag("--serialize", p_serialize, "print the relation interchange format instead of homology");
    poset->callback(
        [&]() { run = [&]() { return cmd_poset(opt, p_kind, p_m, p_n, p_rho, p_group, p_coeff, p_serialize); }; });

    auto* rbs_check = app.add_subcommand("rbs-check", "contractibility and the subdivision dictionary");
    static long r_n = 3, r_rho = 0;
    static std::string r_group = "Z2";
    rbs_check->add_option("--n", r_n, "total rank");
    rbs_check->add_option("--rho", r_rho, "total class (element index)");
    rbs_check->add_option("--group", r_group, "finite abelian group");
    rbs_check->callback([&]() { run = [&]() { return cmd_rbs_check(opt, r_n, r_rho, r_group); }; });

    auto* bounds = app.add_subcommand("bounds", "support-bound table from the chart recurrence");
    static std::string b_flags = "none";
    static long b_tmax = 3, b_smax = 4, b_closed = 0;
    bounds->add_option("--flags", b_flags, "none, III, or III,IV");
    bounds->add_option("--tmax", b_tmax, "rows to compute");
    bounds->add_option("--smax", b_smax, "columns to print");
    bounds->add_option("--closed-forms", b_closed, "also verify closed forms out to this t");
    bounds->callback([&]() { run = [&]() { return cmd_bounds(opt, b_flags, b_tmax, b_smax, b_closed); }; });

    auto* abel = app.add_subcommand("abelianize", "abelianization of a finitely presented group");
    static std::string a_file, a_builtin;
    static bool a_extend = false, a_verify = false;
    abel->add_option("--file", a_file, "presentation file (gens: line plus one relator per line)");
    abel->add_option("--builtin", a_builtin, "swan-sl2 or fgt-sl");
    abel->add_flag("--extend-e", a_extend, "extend by the order-2 conjugation before abelianizing");
    abel->add_flag("--verify-matrices", a_verify, "check every relator against the defining matrices");
    abel->callback([&]() { run = [&]() { return cmd_abelianize(opt, a_file, a_builtin, a_extend, a_verify); }; });

    auto* table = app.add_subcommand("table", "the rank 1..4 abelianization table with sources");
    static long tb_nmax = 4;
    table->add_option("--nmax", tb_nmax, "largest rank row");
    table->callback([&]() { run = [&]() { return cmd_table(opt, tb_nmax); }; });

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    verify->callback([&]() { run = [&]() { return cmd_verify_all(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
