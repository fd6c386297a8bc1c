#include <gridlock/cli.hpp>

#include <gridlock/engine.hpp>
#include <gridlock/families.hpp>
#include <gridlock/graph_io.hpp>
#include <gridlock/oracles.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace gridlock {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDomain = 4;

struct CommonOptions {
    std::string input_path;
    std::string family_name;
    std::optional<long> family_parameter;
    std::string format = "text";
    std::string oracle = "engine";
    std::optional<long> eval_at;
    std::uint64_t budget_colorings = OracleOptions{}.coloring_budget;
    std::uint64_t budget_partitions = OracleOptions{}.partition_budget;
    std::uint64_t budget_terms = EngineOptions{}.term_budget;
    bool memoize = false;
    int workers = 1;
    long seed = 1; // reserved for randomized helpers; deterministic verbs ignore it
};

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_input) {
    if (with_input) {
        cmd->add_option("--input", opts.input_path, "graph file (JSON or edge list)");
        cmd->add_option("--family", opts.family_name, "family name instead of a file");
        auto* param = cmd->add_option("--param", "family parameter");
        param->each([&opts](const std::string& value) { opts.family_parameter = std::stol(value); });
    }
    cmd->add_option("--format", opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--oracle", opts.oracle, "computation method")
        ->check(CLI::IsMember({"engine", "partitions", "bruteforce-interp"}));
    auto* eval = cmd->add_option("--eval-at", "evaluate the polynomial at this k");
    eval->each([&opts](const std::string& value) { opts.eval_at = std::stol(value); });
    cmd->add_option("--budget-colorings", opts.budget_colorings, "max colorings per brute-force call");
    cmd->add_option("--budget-partitions", opts.budget_partitions, "max partitions per enumeration");
    cmd->add_option("--budget-terms", opts.budget_terms, "max terms per engine run");
    cmd->add_flag("--memo", opts.memoize, "memoize engine subcomputations");
    cmd->add_option("--workers", opts.workers, "worker threads for enumeration and expansion");
    cmd->add_option("--seed", opts.seed, "seed for randomized helpers");
}

Graph resolve_input(const CommonOptions& opts) {
    const bool has_file = !opts.input_path.empty();
    const bool has_family = !opts.family_name.empty();
    if (has_file == has_family)
        raise(ErrorKind::ParseError, "exactly one of --input or --family is required");
    if (has_file) return load_graph_file(opts.input_path);
    return build_family(parse_family_spec(opts.family_name, opts.family_parameter));
}

// Whether enumerating all k^n colorings fits the coloring budget.
bool enumeration_affordable(const Graph& g, long k, std::uint64_t budget) {
    if (k <= 0) return true;
    long double total = 1.0L;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        total *= static_cast<long double>(k);
        if (total > static_cast<long double>(budget)) return false;
    }
    return true;
}

EngineOptions engine_options(const CommonOptions& opts) {
    EngineOptions result;
    result.memoize = opts.memoize;
    result.term_budget = opts.budget_terms;
    result.workers = opts.workers;
    return result;
}

OracleOptions oracle_options(const CommonOptions& opts) {
    OracleOptions result;
    result.coloring_budget = opts.budget_colorings;
    result.partition_budget = opts.budget_partitions;
    result.workers = opts.workers;
    return result;
}

IntPolynomial compute_lo(const Graph& g, const CommonOptions& opts) {
    if (opts.oracle == "partitions") return lo_polynomial_via_partitions(g, oracle_options(opts));
    if (opts.oracle == "bruteforce-interp") return lo_polynomial_via_interpolation(g, oracle_options(opts));
    return lo_polynomial(g, engine_options(opts));
}

// Exact LO count at one k. With the default method the count is obtained by
// direct enumeration whenever that fits the coloring budget (some graphs are
// far cheaper to count at a single k than to expand recursively); an explicit
// --oracle choice is honored as-is.
BigInt lo_value_at(const Graph& g, long k, const CommonOptions& opts) {
    if (opts.oracle == "engine" && enumeration_affordable(g, k, opts.budget_colorings))
        return BigInt(brute_force_lo_count(g, static_cast<int>(k), oracle_options(opts)));
    return compute_lo(g, opts).evaluate(BigInt(k));
}

IntPolynomial sg_from_lo(const Graph& g, IntPolynomial lo) {
    if (g.vertex_count() == 0) return IntPolynomial::zero();
    if (g.min_voting_degree() >= 1) return lo - IntPolynomial::monomial(1);
    return lo;
}

BigInt sg_value_at(const Graph& g, long k, const CommonOptions& opts) {
    if (g.vertex_count() == 0) return 0;
    BigInt lo = lo_value_at(g, k, opts);
    if (g.min_voting_degree() >= 1) return lo - k;
    return lo;
}

nlohmann::json polynomial_json(const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_decimal(p.coefficient(i)));
    if (p.is_zero()) coeffs.push_back("0");
    return nlohmann::json{{"coeffs", std::move(coeffs)}, {"display", p.to_string()}};
}

void print_value(const BigInt& value, long k, const CommonOptions& opts, std::ostream& out) {
    if (opts.format == "json")
        out << nlohmann::json{{"k", k}, {"value", to_decimal(value)}}.dump() << "\n";
    else
        out << to_decimal(value) << "\n";
}

void print_polynomial(const IntPolynomial& p, const CommonOptions& opts, std::ostream& out) {
    if (opts.format == "json") out << polynomial_json(p).dump() << "\n";
    else out << p.to_string() << "\n";
}

int run_verify(const Graph& g, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    IntPolynomial engine_poly = lo_polynomial(g, engine_options(opts));
    out << "engine: " << engine_poly.to_string() << "\n";
    int methods = 1;
    bool mismatch = false;

    try {
        IntPolynomial partition_poly = lo_polynomial_via_partitions(g, oracle_options(opts));
        ++methods;
        const bool agree = partition_poly == engine_poly;
        out << "partitions: " << partition_poly.to_string() << (agree ? " (agrees)" : " (MISMATCH)")
            << "\n";
        if (!agree) mismatch = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        out << "partitions: skipped (" << e.what() << ")\n";
    }

    bool brute_sampled = false;
    for (long k = 0; k <= 4; ++k) {
        try {
            std::int64_t count = brute_force_lo_count(g, static_cast<int>(k), oracle_options(opts));
            BigInt predicted = engine_poly.evaluate(BigInt(k));
            const bool agree = BigInt(count) == predicted;
            if (k >= 1 && !brute_sampled) {
                brute_sampled = true;
                ++methods;
            }
            out << "brute force k=" << k << ": " << count << " vs engine " << to_decimal(predicted)
                << (agree ? " (agrees)" : " (MISMATCH)") << "\n";
            if (!agree) mismatch = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            out << "brute force k=" << k << ": skipped (" << e.what() << ")\n";
        }
    }

    if (methods < 2)
        raise(ErrorKind::BudgetExceeded,
              "verification needs at least two methods within budget; raise the budgets");
    if (mismatch) {
        err << "verification mismatch\n";
        return kExitMismatch;
    }
    out << "verified: all methods agree\n";
    return kExitOk;
}

int dispatch(const std::string& verb, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    if (verb == "lo") {
        Graph g = resolve_input(opts);
        if (opts.eval_at) {
            if (*opts.eval_at < 0) raise(ErrorKind::ParseError, "--eval-at requires k >= 0");
            print_value(lo_value_at(g, *opts.eval_at, opts), *opts.eval_at, opts, out);
        } else {
            print_polynomial(compute_lo(g, opts), opts, out);
        }
        return kExitOk;
    }
    if (verb == "sg") {
        Graph g = resolve_input(opts);
        if (opts.eval_at) {
            if (*opts.eval_at < 0) raise(ErrorKind::ParseError, "--eval-at requires k >= 0");
            print_value(sg_value_at(g, *opts.eval_at, opts), *opts.eval_at, opts, out);
        } else {
            print_polynomial(sg_from_lo(g, compute_lo(g, opts)), opts, out);
        }
        return kExitOk;
    }
    if (verb == "eval") {
        Graph g = resolve_input(opts);
        if (!opts.eval_at) raise(ErrorKind::ParseError, "eval requires --k (or --eval-at)");
        if (*opts.eval_at < 0) raise(ErrorKind::ParseError, "eval requires k >= 0");
        print_value(lo_value_at(g, *opts.eval_at, opts), *opts.eval_at, opts, out);
        return kExitOk;
    }
    if (verb == "verify") {
        Graph g = resolve_input(opts);
        return run_verify(g, opts, out, err);
    }
    if (verb == "partitions") {
        Graph g = resolve_input(opts);
        auto partitions = enumerate_lo_partitions(g, oracle_options(opts));
        if (opts.format == "json") {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& partition : partitions) list.push_back(partition.blocks);
            out << list.dump() << "\n";
        } else {
            for (const auto& partition : partitions) {
                bool first_block = true;
                for (const auto& block : partition.blocks) {
                    if (!first_block) out << ' ';
                    first_block = false;
                    out << '{';
                    for (std::size_t i = 0; i < block.size(); ++i) {
                        if (i) out << ',';
                        out << block[i];
                    }
                    out << '}';
                }
                out << "\n";
            }
        }
        return kExitOk;
    }
    raise(ErrorKind::InvalidArgument, "unknown verb '" + verb + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"locally-optimal and strict-gridlock polynomials of graphs"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string family_positional;
    std::optional<long> family_positional_param;

    auto* lo_cmd = app.add_subcommand("lo", "LO-polynomial of a graph");
    add_common_options(lo_cmd, opts, true);
    auto* sg_cmd = app.add_subcommand("sg", "SG-polynomial of a graph");
    add_common_options(sg_cmd, opts, true);
    auto* eval_cmd = app.add_subcommand("eval", "exact count of locally-optimal k-colorings");
    add_common_options(eval_cmd, opts, true);
    auto* k_option = eval_cmd->add_option("--k", "number of colors");
    k_option->each([&opts](const std::string& value) { opts.eval_at = std::stol(value); });
    auto* verify_cmd = app.add_subcommand("verify", "cross-check independent methods");
    add_common_options(verify_cmd, opts, true);
    auto* partitions_cmd = app.add_subcommand("partitions", "list locally-optimal partitions");
    add_common_options(partitions_cmd, opts, true);
    auto* family_cmd = app.add_subcommand("family", "emit a family graph as JSON");
    family_cmd->add_option("name", family_positional, "family name")->required();
    auto* family_param = family_cmd->add_option("param", "family parameter");
    family_param->each(
        [&family_positional_param](const std::string& value) { family_positional_param = std::stol(value); });
    add_common_options(family_cmd, opts, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (family_cmd->parsed()) {
            Graph g = build_family(parse_family_spec(family_positional, family_positional_param));
            out << write_graph_json(g) << "\n";
            return kExitOk;
        }
        for (auto* cmd : {lo_cmd, sg_cmd, eval_cmd, verify_cmd, partitions_cmd}) {
            if (cmd->parsed()) return dispatch(cmd->get_name(), opts, out, err);
        }
        raise(ErrorKind::InvalidArgument, "no verb given");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::ParseError: return kExitParse;
            case ErrorKind::BudgetExceeded: return kExitBudget;
            case ErrorKind::Mismatch: return kExitMismatch;
            default: return kExitDomain;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace gridlock
