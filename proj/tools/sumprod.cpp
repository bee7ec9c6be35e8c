// Command-line surface for the sum-product toolkit: reference-table
// reproduction, SP(k) certificates, chain-case diagrams, two-progression
// analysis and the exhaustive cover checkers. Rational parameters are
// entered as "p/q" strings; decimals are rejected to keep everything exact.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 I/O, 4 budget.

#include "sumprod/chains.hpp"
#include "sumprod/freiman.hpp"
#include "sumprod/gpunion.hpp"
#include "sumprod/search.hpp"
#include "sumprod/sets.hpp"
#include "sumprod/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sumprod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

struct GlobalOptions {
    std::string command_line;
    std::string cache_dir;
    std::string out;
    int threads = 0;

    int resolved_threads() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

std::string hash_hex(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

// Every command records what it ran and what it wrote.
struct ManifestWriter {
    json parameters = json::object();
    std::vector<std::pair<std::string, std::string>> outputs; // path, hash
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add_output(const std::string& path, const std::string& content) {
        outputs.emplace_back(path, hash_hex(content));
    }

    // Best effort: a manifest failure never breaks the primary command.
    void write(const GlobalOptions& opts, const std::string& command) const {
        json entries = json::array();
        for (const auto& [path, hash] : outputs) entries.push_back({{"path", path}, {"hash", hash}});
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        json manifest{{"command_line", opts.command_line},
                      {"parameters", parameters},
                      {"tool_version", kVersion},
                      {"input_hashes", json::object()},
                      {"wall_time_ms", ms},
                      {"outputs", entries}};
        try {
            fs::path dir = opts.out.empty() ? fs::path(opts.cache_dir) : fs::path(opts.out);
            if (!dir.empty() && !fs::exists(dir)) fs::create_directories(dir);
            std::ofstream f(dir / ("manifest_" + command + ".json"));
            f << manifest.dump() << "\n";
        } catch (...) {
        }
    }
};

bool write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << content;
    return static_cast<bool>(f);
}

Rat parse_positive_rat(const std::string& text) {
    Rat q = parse_rat(text);
    if (q <= 0) throw std::invalid_argument("expected a positive rational");
    return q;
}

// ---------------------------------------------------------------------------

int cmd_table1(const GlobalOptions& opts, const std::string& format) {
    ManifestWriter manifest;
    manifest.parameters = {{"format", format}};
    std::ostringstream body;
    bool ok = true;
    std::ostringstream diff;

    if (format == "csv") body << "k,A,sum_size,product_size\n";
    for (const Table1Row& row : table1_rows()) {
        IntSet a(std::vector<Int>(row.elements.begin(), row.elements.end()));
        auto mp = max_pair(a);
        std::ostringstream elems;
        for (std::size_t i = 0; i < row.elements.size(); ++i)
            elems << (i ? ", " : "") << row.elements[i];
        if (format == "csv")
            body << row.k << ",\"{" << elems.str() << "}\"," << mp.sum_size << "," << mp.product_size
                 << "\n";
        else
            body << row.k << " | {" << elems.str() << "} | " << mp.sum_size << " | "
                 << mp.product_size << "\n";
        if (mp.sum_size != row.sum_size || mp.product_size != row.product_size) {
            ok = false;
            diff << "k=" << row.k << " expected (" << row.sum_size << ", " << row.product_size
                 << ") recomputed (" << mp.sum_size << ", " << mp.product_size << ")\n";
        }
    }

    std::cout << body.str();
    if (!opts.out.empty()) {
        fs::path path = fs::path(opts.out) / (format == "csv" ? "table1.csv" : "table1.txt");
        std::error_code ec;
        fs::create_directories(opts.out, ec);
        if (ec || !write_file(path, body.str())) {
            std::cerr << "cannot write " << path << "\n";
            return kExitIo;
        }
        manifest.add_output(path.string(), body.str());
    }
    manifest.write(opts, "table1");
    if (!ok) {
        std::cerr << diff.str();
        return kExitMismatch;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_sp(const GlobalOptions& opts, int k, int M, long long budget) {
    if (k < 2 || k > 10) {
        std::cerr << "sp: --k must be in [2, 10]\n";
        return kExitUsage;
    }
    ManifestWriter manifest;
    manifest.parameters = {{"k", k}, {"M", M}, {"budget", budget}};

    json payload;
    bool all_pass = true;
    if (k == 10) {
        auto ub = branch_and_bound_sp(k, M, budget, opts.resolved_threads());
        payload = open_upper_report_json(ub);
        if (!ub.exhaustive_up_to_M) {
            std::cout << payload.dump() << "\n";
            return kExitBudget;
        }
    } else {
        fs::path cache_file = fs::path(opts.cache_dir) / ("sp_k" + std::to_string(k) + "_M" +
                                                          std::to_string(M) + ".json");
        bool cached = false;
        if (fs::exists(cache_file)) {
            try {
                std::ifstream f(cache_file);
                json wrapper = json::parse(f);
                std::string body = wrapper.at("payload").dump();
                if (wrapper.at("hash").get<std::string>() == hash_hex(body)) {
                    payload = wrapper.at("payload");
                    cached = true;
                }
            } catch (...) {
                cached = false; // corrupt cache entries are recomputed
            }
        }
        if (!cached) {
            auto cert = assemble_certificate(k, M, opts.resolved_threads(), budget);
            payload = certificate_to_json(cert);
            if (!cert.upper.exhaustive_up_to_M) {
                std::cout << payload.dump() << "\n";
                return kExitBudget;
            }
            std::string body = payload.dump();
            json wrapper{{"hash", hash_hex(body)}, {"payload", payload}};
            std::error_code ec;
            fs::create_directories(opts.cache_dir, ec);
            if (!ec) write_file(cache_file, wrapper.dump() + "\n");
        }
        all_pass = payload.at("all_pass").get<bool>();
    }

    std::string text = payload.dump();
    std::cout << text << "\n";
    if (!opts.out.empty()) {
        std::error_code ec;
        fs::create_directories(opts.out, ec);
        fs::path path = fs::path(opts.out) / ("sp_k" + std::to_string(k) + ".json");
        if (ec || !write_file(path, text + "\n")) {
            std::cerr << "cannot write " << path << "\n";
            return kExitIo;
        }
        manifest.add_output(path.string(), text + "\n");
    }
    manifest.write(opts, "sp");
    return all_pass ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

int cmd_chains(const GlobalOptions& opts, const std::string& range, const std::string& case_spec,
               const std::string& format) {
    int lo = 0, hi = 0;
    auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (...) {
        std::cerr << "chains: bad --k range\n";
        return kExitUsage;
    }
    if (lo < 4 || hi > 7 || lo > hi) {
        std::cerr << "chains: --k must lie in [4, 7]\n";
        return kExitUsage;
    }
    if (!case_spec.empty() && lo != hi) {
        std::cerr << "chains: --case requires a single k\n";
        return kExitUsage;
    }

    fs::path out_dir = opts.out.empty() ? fs::path("chains_out") : fs::path(opts.out);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "chains: cannot create " << out_dir << "\n";
        return kExitIo;
    }

    ManifestWriter manifest;
    manifest.parameters = {{"k", range}, {"case", case_spec}, {"format", format}};

    std::optional<std::vector<int>> only_case;
    if (!case_spec.empty()) {
        std::vector<int> indices;
        std::stringstream ss(case_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) indices.push_back(std::stoi(tok));
        only_case = indices;
    }

    bool all_pass = true;
    for (int k = lo; k <= hi; ++k) {
        auto inputs = case_inputs(k);
        std::vector<CaseReport> reports;
        for (std::size_t rank = 0; rank < inputs.size(); ++rank) {
            if (only_case && inputs[rank].indices != *only_case) continue;
            PairPoset poset = build_pair_poset(inputs[rank]);
            CaseReport report;
            report.input = inputs[rank];
            report.chain = longest_chain(poset);
            report.longest = report.chain.length();
            report.pass = report.longest >= 3 * k - 3 && validate_chain(poset, report.chain);
            all_pass = all_pass && report.pass;

            std::string stem = "k" + std::to_string(k) + "_case" + std::to_string(rank);
            std::string content = format == "json" ? case_report_json(report).dump() + "\n"
                                                   : emit_dot(report);
            fs::path path = out_dir / (stem + (format == "json" ? ".json" : ".dot"));
            if (!write_file(path, content)) {
                std::cerr << "chains: cannot write " << path << "\n";
                return kExitIo;
            }
            manifest.add_output(path.string(), content);
            reports.push_back(std::move(report));
        }
        if (only_case && reports.empty()) {
            std::cerr << "chains: case not found for k=" << k << "\n";
            return kExitUsage;
        }
        json summary = chains_summary_json(k, reports);
        std::string summary_text = summary.dump() + "\n";
        std::cout << summary.dump() << "\n";
        fs::path spath = out_dir / ("k" + std::to_string(k) + "_summary.json");
        if (!write_file(spath, summary_text)) return kExitIo;
        manifest.add_output(spath.string(), summary_text);
    }
    manifest.write(opts, "chains");
    return all_pass ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

int cmd_gp_breakdown(const GlobalOptions& opts, const std::string& xs, const std::string& ys,
                     const std::string& rs, long m, long n) {
    GpUnion u;
    try {
        u = make_gp_union(parse_positive_rat(xs), parse_positive_rat(ys), parse_positive_rat(rs), m, n);
    } catch (const std::exception& e) {
        std::cerr << "gp breakdown: " << e.what() << "\n";
        return kExitUsage;
    }
    Breakdown bd = sumset_breakdown(u);
    auto vals = [](const std::vector<Rat>& v) {
        json arr = json::array();
        for (const Rat& q : v) arr.push_back(rat_str(q));
        return arr;
    };
    json out{{"x", rat_str(u.x)},       {"y", rat_str(u.y)},
             {"r", rat_str(u.r)},       {"m", u.m},
             {"n", u.n},                {"bb_size", bd.bb_size},
             {"cc_size", bd.cc_size},   {"bc_size", bd.bc_size},
             {"bb_cc", vals(bd.bb_cc)}, {"bb_bc", vals(bd.bb_bc)},
             {"cc_bc", vals(bd.cc_bc)}, {"total", bd.total}};
    try {
        out["rep_two"] = vals(rep_spectrum(u).twice);
    } catch (const std::domain_error&) {
        out["rep_two"] = nullptr; // leads on one progression
    }
    std::cout << out.dump() << "\n";
    ManifestWriter manifest;
    manifest.parameters = {{"x", xs}, {"y", ys}, {"r", rs}, {"m", m}, {"n", n}};
    manifest.write(opts, "gp_breakdown");
    return kExitOk;
}

int cmd_gp_bounds(const GlobalOptions& opts, int k, const std::string& rs) {
    Rat r;
    try {
        r = parse_positive_rat(rs);
        if (r <= 1) throw std::invalid_argument("ratio must exceed 1");
    } catch (const std::exception& e) {
        std::cerr << "gp bounds: " << e.what() << "\n";
        return kExitUsage;
    }
    if (k < 2) {
        std::cerr << "gp bounds: --k must be at least 2\n";
        return kExitUsage;
    }
    GpSumBounds bounds = gpsum_case_bounds(k, r);

    // Spot-verify the bound on a few constructible unions of this shape.
    long witnesses_checked = 0;
    for (auto [x, y] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
        for (long m : {static_cast<long>((k + 1) / 2), static_cast<long>(k - 1)}) {
            long n = k - m;
            if (n < 1 || m < n) continue;
            try {
                GpUnion u = make_gp_union(Rat(x), Rat(y), r, m, n);
                if (sumset(union_elements(u)).size() < bounds.selected) {
                    std::cerr << "gp bounds: witness below bound\n";
                    return kExitMismatch;
                }
                ++witnesses_checked;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }

    std::cout << gpsum_report_json(k, r, bounds, witnesses_checked).dump() << "\n";
    ManifestWriter manifest;
    manifest.parameters = {{"k", k}, {"r", rs}};
    manifest.write(opts, "gp_bounds");
    return kExitOk;
}

int cmd_gp_families(const GlobalOptions& opts, const std::string& rs, const std::string& zs,
                    const std::string& kind_name, long window) {
    EquationKind kind;
    if (kind_name == "I")
        kind = EquationKind::I;
    else if (kind_name == "II")
        kind = EquationKind::II;
    else if (kind_name == "III")
        kind = EquationKind::III;
    else {
        std::cerr << "gp families: --kind must be I, II or III\n";
        return kExitUsage;
    }
    std::vector<FamilySolution> sols;
    try {
        Rat r = parse_positive_rat(rs);
        Rat z = parse_positive_rat(zs);
        sols = count_family_solutions(make_equation_instance(kind, r, z), window);
    } catch (const std::exception& e) {
        std::cerr << "gp families: " << e.what() << "\n";
        return kExitUsage;
    }
    json arr = json::array();
    for (const FamilySolution& s : sols) arr.push_back({{"a", s.a}, {"b", s.b}, {"c", s.c}});
    json out{{"kind", kind_name}, {"r", rs}, {"z", zs}, {"window", window},
             {"count", sols.size()}, {"solutions", arr}};
    std::cout << out.dump() << "\n";
    ManifestWriter manifest;
    manifest.parameters = {{"kind", kind_name}, {"r", rs}, {"z", zs}, {"window", window}};
    manifest.write(opts, "gp_families");
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_freiman(const GlobalOptions& opts, const std::string& side, int k, int N, long long budget) {
    if (side != "sum" && side != "prod") {
        std::cerr << "freiman: --side must be sum or prod\n";
        return kExitUsage;
    }
    if (k < 4) {
        std::cerr << "freiman: --k must be at least 4\n";
        return kExitUsage;
    }
    if (N < k) {
        std::cerr << "freiman: --N must be at least k\n";
        return kExitUsage;
    }
    FreimanReport report;
    try {
        report = side == "sum" ? check_freiman_3k4_sum(k, N, budget, opts.resolved_threads())
                               : check_freiman_3k4_prod(k, N, budget);
    } catch (const std::exception& e) {
        std::cerr << "freiman: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << to_json(report).dump() << "\n";
    ManifestWriter manifest;
    manifest.parameters = {{"side", side}, {"k", k}, {"N", N}, {"budget", budget}};
    manifest.write(opts, "freiman");
    if (!report.complete) return kExitBudget;
    return report.violations.empty() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions opts;
    {
        std::ostringstream cl;
        for (int i = 0; i < argc; ++i) cl << (i ? " " : "") << argv[i];
        opts.command_line = cl.str();
    }
    std::string cache_dir = ".sumprod-cache";

    CLI::App app{"Exact sum-product extremal toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name
    app.add_option("--threads", opts.threads, "worker threads (0 = auto)");
    app.add_option("--cache-dir", cache_dir, "cache directory (env SUMPROD_CACHE overrides default)");
    app.add_option("--out", opts.out, "output directory");

    std::string format = "text";

    auto* table1 = app.add_subcommand("table1", "recompute the reference table");
    table1->add_option("--format", format, "text, csv");

    int sp_k = 0, sp_m = 64;
    long long sp_budget = -1;
    auto* sp = app.add_subcommand("sp", "SP(k) certificate (k <= 9) or upper-bound report (k = 10)");
    sp->add_option("--k", sp_k, "set size")->required();
    sp->add_option("--M", sp_m, "search cap");
    sp->add_option("--budget", sp_budget, "node budget (-1 = unlimited)");

    std::string chain_range, chain_case, chain_format = "dot";
    auto* chains = app.add_subcommand("chains", "certify chain cases and emit diagrams");
    chains->add_option("--k", chain_range, "k or lo..hi within [4,7]")->required();
    chains->add_option("--case", chain_case, "single index set, e.g. 0,4,5,6,7,8");
    chains->add_option("--format", chain_format, "dot or json");

    auto* gp = app.add_subcommand("gp", "two-progression analysis");
    gp->require_subcommand(1);
    std::string gx = "1", gy = "2", gr = "2", gz = "3", gkind = "I";
    long gm = 4, gn = 4, gwindow = 10;
    int gk = 8;
    auto* breakdown = gp->add_subcommand("breakdown", "inclusion-exclusion breakdown of |A+A|");
    breakdown->add_option("--x", gx)->required();
    breakdown->add_option("--y", gy)->required();
    breakdown->add_option("--r", gr)->required();
    breakdown->add_option("--m", gm)->required();
    breakdown->add_option("--n", gn)->required();
    auto* bounds = gp->add_subcommand("bounds", "combined lower bound for |A+A|");
    bounds->add_option("--k", gk)->required();
    bounds->add_option("--r", gr)->required();
    auto* families = gp->add_subcommand("families", "window-bounded family solutions");
    families->add_option("--r", gr)->required();
    families->add_option("--z", gz)->required();
    families->add_option("--kind", gkind)->required();
    families->add_option("--window", gwindow);

    std::string fr_side = "sum";
    int fr_k = 0, fr_n = 0;
    long long fr_budget = -1;
    auto* freiman = app.add_subcommand("freiman", "exhaustive small-range cover checks");
    freiman->add_option("--side", fr_side, "sum or prod")->required();
    freiman->add_option("--k", fr_k)->required();
    freiman->add_option("--N", fr_n)->required();
    freiman->add_option("--budget", fr_budget, "scan budget (-1 = unlimited)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    // SUMPROD_CACHE overrides --cache-dir.
    const char* cache_env = std::getenv("SUMPROD_CACHE");
    opts.cache_dir = cache_env ? cache_env : cache_dir;

    try {
        if (table1->parsed()) return cmd_table1(opts, format);
        if (sp->parsed()) return cmd_sp(opts, sp_k, sp_m, sp_budget);
        if (chains->parsed()) return cmd_chains(opts, chain_range, chain_case, chain_format);
        if (gp->parsed()) {
            if (breakdown->parsed()) return cmd_gp_breakdown(opts, gx, gy, gr, gm, gn);
            if (bounds->parsed()) return cmd_gp_bounds(opts, gk, gr);
            if (families->parsed()) return cmd_gp_families(opts, gr, gz, gkind, gwindow);
        }
        if (freiman->parsed()) return cmd_freiman(opts, fr_side, fr_k, fr_n, fr_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
