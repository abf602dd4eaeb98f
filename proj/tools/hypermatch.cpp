// Command-line front end for the perfect-matching decision pipeline.
//
//   hypermatch decide  <instance>           exit 0: matching exists, 1: it does not
//   hypermatch find    <instance>           same, but prints an explicit matching
//   hypermatch certify <instance>           prints the non-existence certificate as JSON
//   hypermatch verify  <instance> <cert>    exit 0: certificate valid, 1: invalid
//   hypermatch gen     <family> ...         writes an instance file
//   hypermatch bench   ...                  deterministic pipeline counters as CSV
//
// Exit codes: 0/1 as above, 2 for unusable input (parse errors, bad parameters,
// malformed certificates), 3 when the instance falls outside the method's regime
// (degenerate for the listing procedure with fallback disabled, budget exhausted).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hypermatch/construct.hpp"
#include "hypermatch/decide.hpp"
#include "hypermatch/errors.hpp"
#include "hypermatch/io.hpp"
#include "hypermatch/search.hpp"

namespace {

constexpr int kExitPm = 0;
constexpr int kExitNoPm = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitRegime = 3;

int default_threads() {
    if (const char* env = std::getenv("HYPERMATCH_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

struct CommonOpts {
    std::string gamma = "1/20";
    std::string eps = "1/10000";
    long long cfar = -1;  // -1 = default 2k(k-3)
    long long brute_threshold = -1;
    long long brute_budget = 200'000'000;
    bool no_fallback = false;
    int threads = default_threads();
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--gamma", opts.gamma, "density margin gamma as a rational p/q");
    cmd->add_option("--eps", opts.eps,
                    "codegree slack eps as a rational p/q (must be a perfect square)");
    cmd->add_option("--cfar", opts.cfar, "far-set budget C (-1 for the default 2k(k-3))");
    cmd->add_option("--brute-threshold", opts.brute_threshold,
                    "decide instances with n below this exactly (-1 for automatic)");
    cmd->add_option("--brute-budget", opts.brute_budget,
                    "node budget for exact search fallbacks");
    cmd->add_flag("--no-fallback", opts.no_fallback,
                  "fail with exit 3 instead of falling back to exact search");
    cmd->add_option("-j,--threads", opts.threads,
                    "worker threads (default: HYPERMATCH_THREADS or 1)");
}

hm::RunConfig to_config(const CommonOpts& opts) {
    hm::RunConfig cfg;
    cfg.gamma = hm::parse_rational(opts.gamma);
    cfg.eps = hm::parse_rational(opts.eps);
    hm::sqrt_eps_or_throw(cfg.eps);  // validate eagerly so bad eps is exit 2
    if (cfg.gamma <= hm::Rat(0)) throw std::invalid_argument("gamma must be positive");
    if (opts.cfar >= 0) cfg.cfar = opts.cfar;
    cfg.brute_threshold = opts.brute_threshold;
    cfg.brute_node_budget = opts.brute_budget;
    cfg.fallback_brute = !opts.no_fallback;
    if (opts.threads < 1) throw std::invalid_argument("thread count must be at least 1");
    cfg.threads = opts.threads;
    return cfg;
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write \"" + path + "\"");
    out << body;
}

int run_decide(const std::string& path, const CommonOpts& opts, bool extract) {
    hm::Hypergraph H = hm::parse_instance_file(path);
    hm::RunConfig cfg = to_config(opts);
    hm::Decision dec = extract ? hm::find_pm(H, cfg) : hm::decide_existence(H, cfg);
    std::cout << hm::decision_to_json(dec).dump(2) << "\n";
    return dec.pm_exists ? kExitPm : kExitNoPm;
}

int run_certify(const std::string& path, const std::string& out, const CommonOpts& opts) {
    hm::Hypergraph H = hm::parse_instance_file(path);
    hm::RunConfig cfg = to_config(opts);
    auto cert = hm::find_certificate(H, cfg);
    if (!cert) {
        std::cerr << "no certificate: the far-set scan found every full pair soluble\n";
        return kExitPm;
    }
    write_output(out, hm::certificate_to_json(*cert).dump(2) + "\n");
    return kExitNoPm;
}

int run_verify(const std::string& instance_path, const std::string& cert_path) {
    hm::Hypergraph H = hm::parse_instance_file(instance_path);
    std::ifstream in(cert_path);
    if (!in) throw std::invalid_argument("cannot open \"" + cert_path + "\"");
    nlohmann::json j;
    in >> j;
    hm::Certificate cert = hm::certificate_from_json(j);
    bool ok = hm::verify_certificate(H, cert);
    std::cout << (ok ? "valid\n" : "invalid\n");
    return ok ? kExitPm : kExitNoPm;
}

struct GenOpts {
    std::string family;
    int k = 3;
    int n = 0;
    int a = 0, b = 0;
    int s = 1;
    int codegree = -1;
    std::uint64_t seed = 0;
    bool plant = false;
    std::string out;
};

int run_gen(const GenOpts& g) {
    hm::Hypergraph H = [&]() {
        if (g.family == "complete") return hm::gen_complete(g.k, g.n);
        if (g.family == "parity") return hm::gen_parity(g.k, g.a, g.b);
        if (g.family == "mod3") return hm::gen_mod3(g.k, g.n);
        if (g.family == "nested") return hm::gen_nested_minimal(g.k);
        if (g.family == "general") {
            return hm::gen_general_nopm(g.k, g.n > 0 ? g.n : hm::gen_general_nopm_min_n(g.k));
        }
        if (g.family == "space") return hm::gen_space_barrier(g.k, g.n, g.s);
        if (g.family == "random") {
            int target = g.codegree >= 0 ? g.codegree : g.n / g.k + 1;
            return hm::gen_random_dense(g.k, g.n, target, g.seed, g.plant);
        }
        throw std::invalid_argument("unknown family \"" + g.family + "\"");
    }();
    std::ostringstream comment;
    comment << "family=" << g.family << " k=" << g.k << " n=" << H.vertex_count();
    if (g.family == "random") comment << " seed=" << g.seed << " plant=" << (g.plant ? 1 : 0);
    write_output(g.out, hm::serialize_instance(H, comment.str()));
    return kExitPm;
}

struct BenchOpts {
    std::string out;
    int k = 3;
    std::vector<int> sizes{9, 12};
    int seeds = 2;
    CommonOpts common;
};

// One CSV row per (family, n, seed): instance shape, decision outcome, and the search
// counters. Counters only -- no timings -- so output is reproducible bit for bit.
int run_bench(const BenchOpts& b) {
    hm::RunConfig cfg = to_config(b.common);
    std::ostringstream csv;
    csv << "family,k,n,seed,edges,min_codegree,result,mode,cert_far,far_sets,listings,"
           "partitions,extensions,leaves,removals,fallbacks\n";
    auto row = [&](const std::string& family, std::uint64_t seed, const hm::Hypergraph& H) {
        hm::CertificateSearchOutcome outcome;
        hm::Decision dec;
        hm::SearchReport report;
        long long thr = hm::resolved_brute_threshold(cfg, H.uniformity());
        if (H.vertex_count() % H.uniformity() == 0 && H.vertex_count() >= thr) {
            outcome = hm::certificate_search(H, cfg);
        }
        dec = hm::find_pm(H, cfg, &report);
        csv << family << "," << H.uniformity() << "," << H.vertex_count() << "," << seed << ","
            << H.edge_count() << "," << hm::min_codegree(H, cfg.threads) << ","
            << (dec.pm_exists ? "pm" : "no_pm") << "," << to_string(dec.mode) << ","
            << (dec.certificate ? static_cast<long long>(dec.certificate->far_set.size()) : -1)
            << "," << outcome.stats.far_sets_examined << "," << outcome.stats.listing_runs << ","
            << outcome.stats.partitions_listed << "," << outcome.stats.extensions_checked << ","
            << outcome.stats.leaves_total << "," << report.removals.size() << ","
            << report.fallbacks << "\n";
    };
    for (int n : b.sizes) {
        for (int s = 0; s < b.seeds; ++s) {
            auto seed = static_cast<std::uint64_t>(s);
            row("random", seed,
                hm::gen_random_dense(b.k, n, n / b.k + 1, seed, /*plant_pm=*/true));
        }
        if (n % 3 == 0 && b.k == 3) row("parity", 0, hm::gen_parity(3, 3, n - 3));
    }
    write_output(b.out, csv.str());
    return kExitPm;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect matchings in dense uniform hypergraphs: decide, extract, certify"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string instance_path;
    std::string cert_path;
    std::string out_path;

    CLI::App* decide = app.add_subcommand("decide", "decide whether a perfect matching exists");
    decide->add_option("instance", instance_path, "instance file")->required();
    add_common(decide, opts);

    CLI::App* find = app.add_subcommand("find", "decide and extract an explicit matching");
    find->add_option("instance", instance_path, "instance file")->required();
    add_common(find, opts);

    CLI::App* certify = app.add_subcommand("certify", "emit a non-existence certificate");
    certify->add_option("instance", instance_path, "instance file")->required();
    certify->add_option("-o,--out", out_path, "output file (default: stdout)");
    add_common(certify, opts);

    CLI::App* verify = app.add_subcommand("verify", "check a certificate against an instance");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    GenOpts gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("family", gen_opts.family,
                    "complete | parity | mod3 | nested | general | space | random")
        ->required();
    gen->add_option("-k,--uniformity", gen_opts.k, "edge size");
    gen->add_option("-n,--vertices", gen_opts.n, "vertex count");
    gen->add_option("--part-a", gen_opts.a, "parity: size of the odd part A");
    gen->add_option("--part-b", gen_opts.b, "parity: size of the complement");
    gen->add_option("--space-s", gen_opts.s, "space: size of the blocking set S");
    gen->add_option("--codegree", gen_opts.codegree,
                    "random: minimum (k-1)-set codegree (default n/k + 1)");
    gen->add_option("--seed", gen_opts.seed, "random: RNG seed");
    gen->add_flag("--plant", gen_opts.plant, "random: force a perfect matching in");
    gen->add_option("-o,--out", gen_opts.out, "output file (default: stdout)");

    BenchOpts bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "pipeline counters as CSV");
    bench->add_option("-k,--uniformity", bench_opts.k, "edge size");
    bench->add_option("-n,--sizes", bench_opts.sizes, "vertex counts to sweep");
    bench->add_option("--seeds", bench_opts.seeds, "random seeds per size");
    bench->add_option("-o,--out", bench_opts.out, "output file (default: stdout)");
    add_common(bench, bench_opts.common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return run_decide(instance_path, opts, /*extract=*/false);
        if (find->parsed()) return run_decide(instance_path, opts, /*extract=*/true);
        if (certify->parsed()) return run_certify(instance_path, out_path, opts);
        if (verify->parsed()) return run_verify(instance_path, cert_path);
        if (gen->parsed()) return run_gen(gen_opts);
        if (bench->parsed()) return run_bench(bench_opts);
    } catch (const hm::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBadInput;
    } catch (const hm::GenerationFailure& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBadInput;
    } catch (const hm::DegenerateInput& ex) {
        std::cerr << "regime: " << ex.what() << "\n";
        return kExitRegime;
    } catch (const hm::RegimeViolation& ex) {
        std::cerr << "regime: " << ex.what() << "\n";
        return kExitRegime;
    } catch (const nlohmann::json::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
