#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "unispecht/charpoly.hpp"
#include "unispecht/errors.hpp"
#include "unispecht/oracle.hpp"
#include "unispecht/report.hpp"
#include "unispecht/theorems.hpp"
#include "unispecht/version.hpp"

namespace {

using namespace unispecht;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    std::string lo = text, hi = text;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        lo = text.substr(0, dots);
        hi = text.substr(dots + 2);
    }
    unsigned a = 0, b = 0;
    try {
        std::size_t used = 0;
        a = std::stoul(lo, &used);
        if (used != lo.size())
            throw std::invalid_argument(lo);
        b = std::stoul(hi, &used);
        if (used != hi.size())
            throw std::invalid_argument(hi);
    } catch (const std::logic_error&) {
        throw argument_error("bad scan range '" + text + "' (expected e.g. 2..10)");
    }
    if (a < 2 || a > b || b > kMaxScanN)
        throw argument_error("scan range must satisfy 2 <= min <= max <= " +
                             std::to_string(kMaxScanN) + ", got '" + text + "'");
    return {a, b};
}

// Single versioned JSON document mapping "n|lambda" to verdict objects.
// Anything unreadable or from another engine build is ignored with a
// warning, never trusted.
class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in)
            return;
        try {
            nlohmann::json doc = nlohmann::json::parse(in);
            if (doc.at("version").get<std::string>() != kFormatVersion ||
                doc.at("engine").get<std::string>() != kEngineVersion) {
                std::cerr << "warning: cache " << path_ << " was written by a different "
                          << "engine or format version; recomputing\n";
                return;
            }
            entries_ = doc.at("entries");
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring unreadable cache " << path_ << " (" << e.what()
                      << ")\n";
            entries_ = nlohmann::json::object();
        }
    }

    std::optional<UnisingularVerdict> lookup(unsigned n, const Partition& lambda) const {
        auto it = entries_.find(key(n, lambda));
        if (it == entries_.end())
            return std::nullopt;
        try {
            return verdict_from_json(*it);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(unsigned n, const UnisingularVerdict& v) {
        entries_[key(n, v.lambda)] = verdict_to_json(v);
    }

    void save() const {
        std::ofstream out(path_);
        if (!out) {
            std::cerr << "warning: cannot write cache " << path_ << "\n";
            return;
        }
        nlohmann::json doc{{"version", kFormatVersion},
                           {"engine", kEngineVersion},
                           {"entries", entries_}};
        out << doc.dump(1) << '\n';
    }

private:
    static std::string key(unsigned n, const Partition& lambda) {
        return std::to_string(n) + "|" + lambda.str();
    }

    std::string path_;
    nlohmann::json entries_ = nlohmann::json::object();
};

int run_scan(const std::string& range, const std::string& format, unsigned jobs,
             std::string cache_path, bool verify_cache) {
    auto [n_min, n_max] = parse_range(range);
    if (format != "md" && format != "json" && format != "csv")
        throw argument_error("unknown format '" + format + "' (expected md, json or csv)");

    if (cache_path.empty())
        if (const char* env = std::getenv("UNISPECHT_CACHE"))
            cache_path = env;
    std::optional<ResultCache> cache;
    if (!cache_path.empty())
        cache.emplace(cache_path);

    std::atomic<bool> cache_mismatch{false};
    std::vector<ScanReport> reports;
    for (unsigned n = n_min; n <= n_max; ++n) {
        std::vector<Partition> shapes = enumerate_partitions(n);
        std::vector<UnisingularVerdict> verdicts(shapes.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= shapes.size())
                        return;
                    std::optional<UnisingularVerdict> hit =
                        cache ? cache->lookup(n, shapes[i]) : std::nullopt;
                    if (hit && verify_cache) {
                        UnisingularVerdict fresh = verdict(shapes[i]);
                        if (verdict_to_json(fresh).dump() != verdict_to_json(*hit).dump()) {
                            std::cerr << "cache verification failure: entry for n=" << n
                                      << " lambda=" << shapes[i].str()
                                      << " does not reproduce fresh computation\n";
                            cache_mismatch = true;
                            hit = fresh;
                        }
                    }
                    verdicts[i] = hit ? *hit : verdict(shapes[i]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };
        unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(shapes.size())));
        if (count == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < count; ++t)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }
        if (failure)
            std::rethrow_exception(failure);
        reports.push_back(make_scan_report(n, std::move(verdicts)));
        if (cache)
            for (const UnisingularVerdict& v : reports.back().verdicts)
                cache->store(n, v);
    }
    if (cache)
        cache->save();

    if (format == "md")
        std::cout << to_markdown(reports);
    else if (format == "json")
        std::cout << to_json(reports).dump(2) << '\n';
    else
        std::cout << to_csv(reports);
    return cache_mismatch ? kExitVerificationFailure : kExitOk;
}

int run_check(const std::string& lambda_text, bool alternating, const std::string& format) {
    Partition lambda = parse_partition(lambda_text);
    UnisingularVerdict v = alternating ? verdict_alternating(lambda) : verdict(lambda);
    if (format == "json") {
        std::cout << verdict_to_json(v).dump(2) << '\n';
        return kExitOk;
    }
    if (format != "text")
        throw argument_error("unknown format '" + format + "' (expected text or json)");
    std::cout << "lambda " << lambda.str() << ": dimension " << v.dimension.get_str() << '\n';
    std::string group = alternating ? " over A_" + std::to_string(lambda.n()) : "";
    if (v.unisingular) {
        std::cout << "unisingular" << group << '\n';
    } else {
        std::cout << "not unisingular" << group << "; offending:";
        for (const Partition& mu : v.offending)
            std::cout << ' ' << mu.str();
        std::cout << '\n';
    }
    return kExitOk;
}

int run_charpoly(const std::string& lambda_text, const std::string& mu_text, bool do_expand) {
    Partition lambda = parse_partition(lambda_text);
    Partition mu = parse_partition(mu_text);
    if (lambda.n() != mu.n())
        throw argument_error("lambda " + lambda.str() + " and mu " + mu.str() +
                             " partition different n");
    CycloProduct p = charpoly(lambda, mu);
    std::cout << p.str() << '\n';
    if (do_expand)
        std::cout << "= " << polynomial_str(expand(p)) << '\n';
    return kExitOk;
}

int run_witness(unsigned n, unsigned k, const std::string& mu_text) {
    Partition mu = parse_partition(mu_text);
    Witness w = witness_subset(n, k, mu);
    std::cout << w.str() << '\n';
    if (!witness_valid(w))
        throw internal_error("witness failed its own validity check");
    return kExitOk;
}

int run_verify(const std::string& suite, std::optional<unsigned> max_n) {
    std::vector<TheoremReport> reports;
    auto gamma_n = max_n.value_or(kDefaultFamilyMaxN);
    auto offender_n = max_n.value_or(kDefaultSingleOffenderMaxN);

    if (suite == "gamma" || suite == "all") {
        auto batch = verify_hook_family(gamma_n);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }
    if (suite == "theorem13" || suite == "all")
        reports.push_back(verify_two_column_family(gamma_n));
    if (suite == "emu" || suite == "all")
        reports.push_back(verify_minus_one_rule(gamma_n));
    if (suite == "single-offender" || suite == "all")
        reports.push_back(verify_single_offender(offender_n));
    if (reports.empty())
        throw argument_error("unknown suite '" + suite +
                             "' (expected gamma, theorem13, emu, single-offender or all)");

    bool all_passed = true;
    for (const TheoremReport& r : reports) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.range << "]";
        if (r.counterexample)
            std::cout << ": " << *r.counterexample;
        std::cout << '\n';
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact unisingularity scanner for Specht modules of symmetric groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kEngineVersion);

    std::string range, format = "md", cache_path, lambda_text, mu_text, suite;
    unsigned jobs = 1, witness_n = 0, witness_k = 0;
    bool verify_cache = false, alternating = false, do_expand = false;
    std::string check_format = "text";
    std::optional<unsigned> max_n;

    auto* scan_cmd = app.add_subcommand("scan", "verdicts for every lambda of n in a range");
    scan_cmd->add_option("range", range, "n range, e.g. 2..10 or 6..6")->required();
    scan_cmd->add_option("--format", format, "md, json or csv");
    scan_cmd->add_option("--jobs", jobs, "worker threads");
    scan_cmd->add_option("--cache", cache_path, "result cache path (or UNISPECHT_CACHE)");
    scan_cmd->add_flag("--verify-cache", verify_cache, "recompute cache hits and compare");

    auto* check_cmd = app.add_subcommand("check", "verdict for a single lambda");
    check_cmd->add_option("lambda", lambda_text, "partition literal, e.g. 4,4 or 2^2,1^3")
        ->required();
    check_cmd->add_flag("--alternating", alternating, "restrict to even classes (A_n)");
    check_cmd->add_option("--format", check_format, "text or json");

    auto* charpoly_cmd =
        app.add_subcommand("charpoly", "characteristic polynomial of a class on a Specht module");
    charpoly_cmd->add_option("lambda", lambda_text, "shape partition")->required();
    charpoly_cmd->add_option("mu", mu_text, "class partition")->required();
    charpoly_cmd->add_flag("--expand", do_expand, "also print integer coefficients");

    auto* verify_cmd = app.add_subcommand("verify", "run a theorem suite");
    verify_cmd->add_option("suite", suite, "gamma, theorem13, emu, single-offender or all")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "override the suite's default range");

    auto* witness_cmd =
        app.add_subcommand("witness", "product-1 eigenvalue selection on the standard module");
    witness_cmd->add_option("n", witness_n, "symmetric group degree")->required();
    witness_cmd->add_option("k", witness_k, "exterior power")->required();
    witness_cmd->add_option("mu", mu_text, "class partition")->required();

    try {
        app.parse(argc, argv);
        if (scan_cmd->parsed())
            return run_scan(range, format, jobs, cache_path, verify_cache);
        if (check_cmd->parsed())
            return run_check(lambda_text, alternating, check_format);
        if (charpoly_cmd->parsed())
            return run_charpoly(lambda_text, mu_text, do_expand);
        if (verify_cmd->parsed())
            return run_verify(suite, max_n);
        if (witness_cmd->parsed())
            return run_witness(witness_n, witness_k, mu_text);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help / --version
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const argument_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}
