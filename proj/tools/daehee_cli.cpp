// Command-line surface for the daehee-kit library: sequence tables,
// polynomial coefficients, the identity verification suite, and Volkenborn
// convergence probes. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.
//
// Option precedence: explicit flags, then DAEHEE_* environment variables,
// then the config file named by --config. CLI11 handles the first two; the
// config layer is applied by hand afterwards because its native ordering
// would put the file above the environment.

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daehee/bernoulli.hpp"
#include "daehee/daehee.hpp"
#include "daehee/report_io.hpp"
#include "daehee/stirling.hpp"
#include "daehee/verify.hpp"
#include "daehee/volkenborn.hpp"

namespace {

using daehee::io::Json;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

std::vector<daehee::Rational> parse_rational_list(const std::string& text) {
    std::vector<daehee::Rational> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        values.push_back(daehee::parse_rational(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

// "a..b" (inclusive) or a single "a".
std::pair<int, int> parse_depth_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    const auto to_int = [](const std::string& s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("malformed depth '" + s + "'");
        }
        return v;
    };
    if (dots == std::string::npos) {
        const int d = to_int(text);
        return {d, d};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

// --- config file -----------------------------------------------------------

// INI-style: [subcommand] sections with key=value lines, '#'/';' comments.
std::map<std::string, std::map<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    const auto trim = [](std::string s) {
        const auto from = s.find_first_not_of(" \t\r");
        const auto to = s.find_last_not_of(" \t\r");
        return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
    };
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::string section;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed config line '" + line + "'");
        }
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        sections[section][trim(line.substr(0, eq))] = value;
    }
    return sections;
}

// Fills options that neither a flag nor an environment variable set.
class ConfigLayer {
public:
    ConfigLayer(const CLI::App* subcommand,
                const std::map<std::string, std::map<std::string, std::string>>& sections)
        : subcommand_(subcommand) {
        const auto it = sections.find(subcommand->get_name());
        if (it != sections.end()) {
            values_ = &it->second;
        }
    }

    std::optional<std::string> lookup(const std::string& flag, const std::string& key) const {
        if (values_ == nullptr) return std::nullopt;
        if (subcommand_->count(flag) > 0) return std::nullopt;  // flag or env already set it
        const auto it = values_->find(key);
        if (it == values_->end()) return std::nullopt;
        return it->second;
    }

    void fill(const std::string& flag, const std::string& key, std::string& target) const {
        if (const auto v = lookup(flag, key)) target = *v;
    }

    template <typename Int>
    void fill_integer(const std::string& flag, const std::string& key, Int& target) const {
        const auto v = lookup(flag, key);
        if (!v) return;
        std::size_t used = 0;
        long long parsed = 0;
        try {
            parsed = std::stoll(*v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != v->size()) {
            throw std::invalid_argument("config value '" + key + "=" + *v + "' is not an integer");
        }
        target = static_cast<Int>(parsed);
    }

    void fill_bool(const std::string& flag, const std::string& key, bool& target) const {
        const auto v = lookup(flag, key);
        if (!v) return;
        if (*v == "true" || *v == "1") {
            target = true;
        } else if (*v == "false" || *v == "0") {
            target = false;
        } else {
            throw std::invalid_argument("config value '" + key + "=" + *v + "' is not a boolean");
        }
    }

private:
    const CLI::App* subcommand_;
    const std::map<std::string, std::string>* values_ = nullptr;
};

int check_format(const std::string& format) {
    if (format != "json" && format != "csv") {
        return usage_error("unknown format '" + format + "'");
    }
    return 0;
}

// --- table ------------------------------------------------------------------

struct TableArgs {
    std::string sequence;
    int n_max = -1;  // -1 = not given
    int k = -1;
    std::string format = "json";
};

int run_table(const TableArgs& args) {
    if (args.n_max < 0) {
        return usage_error("table requires --n-max >= 0");
    }
    const bool wants_k =
        args.sequence == "daehee1" || args.sequence == "daehee2" || args.sequence == "bernoulli";
    if (wants_k && args.k < 0) {
        return usage_error("sequence '" + args.sequence + "' requires --k");
    }
    if (!wants_k && args.k >= 0) {
        return usage_error("sequence '" + args.sequence + "' does not take --k");
    }
    if ((args.sequence == "daehee1" || args.sequence == "daehee2") && args.k < 1) {
        return usage_error("Daehee order k must be >= 1");
    }

    std::vector<daehee::io::TableEntry> entries;
    if (args.sequence == "daehee1") {
        const daehee::StirlingCache stirling(args.n_max + args.k);
        for (int n = 0; n <= args.n_max; ++n) {
            entries.push_back({{{"n", n}}, daehee::daehee1_number_closed(stirling, n, args.k)});
        }
    } else if (args.sequence == "daehee2") {
        const daehee::StirlingCache stirling(args.n_max);
        const daehee::BernoulliCalculator bernoulli(args.n_max, args.k);
        for (int n = 0; n <= args.n_max; ++n) {
            entries.push_back({{{"n", n}}, daehee::daehee2_number(stirling, bernoulli, n, args.k)});
        }
    } else if (args.sequence == "bernoulli") {
        const daehee::BernoulliCalculator bernoulli(args.n_max, args.k);
        for (int n = 0; n <= args.n_max; ++n) {
            entries.push_back({{{"n", n}}, bernoulli.number(n, args.k)});
        }
    } else if (args.sequence == "stirling1" || args.sequence == "stirling2") {
        const daehee::StirlingCache stirling(args.n_max);
        for (int n = 0; n <= args.n_max; ++n) {
            for (int l = 0; l <= n; ++l) {
                const daehee::BigInt& v =
                    args.sequence == "stirling1" ? stirling.s1(n, l) : stirling.s2(n, l);
                entries.push_back({{{"n", n}, {"l", l}}, daehee::Rational(v)});
            }
        }
    } else {
        return usage_error("unknown sequence '" + args.sequence + "'");
    }

    if (args.format == "csv") {
        std::cout << daehee::io::table_csv(entries);
    } else {
        Json params;
        params["sequence"] = args.sequence;
        params["n_max"] = args.n_max;
        if (wants_k) params["k"] = args.k;
        std::cout << daehee::io::dump(daehee::io::table_json(std::move(params), entries));
    }
    return 0;
}

// --- poly -------------------------------------------------------------------

struct PolyArgs {
    std::string sequence;
    int n = -1;
    int k = -1;
    std::string format = "json";
};

int run_poly(const PolyArgs& args) {
    if (args.n < 0) {
        return usage_error("poly requires --n >= 0");
    }
    if (args.k < 0) {
        return usage_error("poly requires --k");
    }
    daehee::RationalPolynomial p;
    if (args.sequence == "daehee1" || args.sequence == "daehee2") {
        if (args.k < 1) {
            return usage_error("Daehee order k must be >= 1");
        }
        const daehee::StirlingCache stirling(args.n);
        const daehee::BernoulliCalculator bernoulli(args.n, args.k);
        p = args.sequence == "daehee1" ? daehee::daehee1_poly(stirling, bernoulli, args.n, args.k)
                                       : daehee::daehee2_poly(stirling, bernoulli, args.n, args.k);
    } else if (args.sequence == "bernoulli") {
        const daehee::BernoulliCalculator bernoulli(args.n, args.k);
        p = bernoulli.polynomial(args.n, args.k);
    } else {
        return usage_error("unknown sequence '" + args.sequence + "'");
    }

    if (args.format == "csv") {
        std::cout << daehee::io::poly_csv(p);
    } else {
        Json params;
        params["sequence"] = args.sequence;
        params["n"] = args.n;
        params["k"] = args.k;
        std::cout << daehee::io::dump(daehee::io::poly_json(std::move(params), p));
    }
    return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string ids = "all";
    int n_max = 20;
    int k_max = 6;
    std::string x_samples;
    int jobs = 1;
    std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
    if (args.n_max < 0 || args.k_max < 1 || args.jobs < 1) {
        return usage_error("need --n-max >= 0, --k-max >= 1 and --jobs >= 1");
    }
    std::vector<daehee::Rational> samples;
    if (args.x_samples.empty()) {
        samples = daehee::IdentityChecker::default_x_samples();
    } else {
        try {
            samples = parse_rational_list(args.x_samples);
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
    }

    std::vector<daehee::IdentityId> ids;
    const bool run_all = args.ids == "all";
    if (!run_all) {
        std::size_t pos = 0;
        while (pos <= args.ids.size()) {
            const std::size_t comma = args.ids.find(',', pos);
            const std::string name =
                args.ids.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const auto id = daehee::identity_from_string(name);
            if (!id) {
                return usage_error("unknown identity id '" + name + "'");
            }
            ids.push_back(*id);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    const daehee::IdentityChecker checker(args.n_max, args.k_max);
    std::vector<daehee::VerificationReport> reports;
    if (run_all) {
        reports = checker.check_all(args.n_max, args.k_max, samples, args.jobs);
    } else {
        for (daehee::IdentityId id : ids) {
            reports.push_back(checker.check_identity(id, args.n_max, args.k_max, samples));
        }
    }

    if (args.format == "csv") {
        std::cout << daehee::io::verify_csv(reports);
    } else {
        Json params;
        params["ids"] = args.ids;
        params["n_max"] = args.n_max;
        params["k_max"] = args.k_max;
        Json sample_list = Json::array();
        for (const auto& x : samples) {
            sample_list.push_back(daehee::to_string(x));
        }
        params["x_samples"] = std::move(sample_list);
        std::cout << daehee::io::dump(daehee::io::verify_json(std::move(params), reports));
    }
    return daehee::all_passed(reports) ? 0 : 1;
}

// --- volkenborn ---------------------------------------------------------------

struct VolkenbornArgs {
    int n = -1;
    int k = 1;
    long long p = 0;
    std::string depths;
    long long budget = daehee::VolkenbornOptions{}.budget;
    bool literal_only = false;
    std::string format = "json";
};

int run_volkenborn(const VolkenbornArgs& args) {
    if (args.n < 0) {
        return usage_error("volkenborn requires --n >= 0");
    }
    if (args.k < 1) {
        return usage_error("need --k >= 1");
    }
    if (!daehee::is_prime(args.p)) {
        return usage_error("p = " + std::to_string(args.p) + " is not prime");
    }
    if (args.depths.empty()) {
        return usage_error("volkenborn requires --depths");
    }
    int depth_min = 0;
    int depth_max = 0;
    try {
        std::tie(depth_min, depth_max) = parse_depth_range(args.depths);
    } catch (const std::exception& e) {
        return usage_error(std::string("bad --depths: ") + e.what());
    }
    if (depth_min < 0 || depth_min > depth_max) {
        return usage_error("bad --depths: need 0 <= min <= max");
    }

    daehee::VolkenbornOptions options;
    options.budget = args.budget;
    options.allow_closed_form = !args.literal_only;

    const daehee::RationalPolynomial f = daehee::falling_factorial_poly(args.n);
    const daehee::Rational exact =
        daehee::volkenborn_exact_multi(args.k, args.n, daehee::Rational(0), daehee::FactorialKind::falling);
    std::vector<daehee::VolkenbornProbe> probes;
    for (int depth = depth_min; depth <= depth_max; ++depth) {
        daehee::Rational partial;
        try {
            partial = daehee::volkenborn_partial_multi(f, args.k, args.p, depth, options);
        } catch (const std::domain_error& e) {
            return usage_error(std::string(e.what()) +
                               " (raise --budget, lower the depth, or drop --literal-only)");
        }
        probes.push_back(daehee::VolkenbornProbe{args.p, depth, f, partial, exact,
                                                 daehee::valuation(partial - exact, args.p)});
    }

    if (args.format == "csv") {
        std::cout << daehee::io::volkenborn_csv(probes);
    } else {
        Json params;
        params["n"] = args.n;
        params["k"] = args.k;
        params["p"] = args.p;
        params["depth_min"] = depth_min;
        params["depth_max"] = depth_max;
        std::cout << daehee::io::dump(daehee::io::volkenborn_json(std::move(params), probes));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"daehee-kit: exact Daehee/Bernoulli/Stirling sequences and identity verification"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "read defaults from an INI config file");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "emit a sequence table");
    table->add_option("sequence", table_args.sequence,
                      "one of daehee1, daehee2, bernoulli, stirling1, stirling2")
        ->required();
    table->add_option("--n-max", table_args.n_max, "largest index n")->envname("DAEHEE_N_MAX");
    table->add_option("--k", table_args.k, "order (required for daehee/bernoulli sequences)")
        ->envname("DAEHEE_K");
    table->add_option("--format", table_args.format, "json or csv")->envname("DAEHEE_FORMAT");

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "emit polynomial coefficients, ascending powers");
    poly->add_option("sequence", poly_args.sequence, "one of daehee1, daehee2, bernoulli")->required();
    poly->add_option("--n", poly_args.n, "degree index n")->envname("DAEHEE_N");
    poly->add_option("--k", poly_args.k, "order")->envname("DAEHEE_K");
    poly->add_option("--format", poly_args.format, "json or csv")->envname("DAEHEE_FORMAT");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--ids", verify_args.ids, "'all' or comma-separated identity ids")
        ->envname("DAEHEE_IDS");
    verify->add_option("--n-max", verify_args.n_max, "grid bound for n")->envname("DAEHEE_N_MAX");
    verify->add_option("--k-max", verify_args.k_max, "grid bound for k")->envname("DAEHEE_K_MAX");
    verify->add_option("--x-samples", verify_args.x_samples,
                       "comma-separated rational sample points (default 0,1,-1,1/2,-3/2)");
    verify->add_option("--jobs", verify_args.jobs, "parallelism hint")->envname("DAEHEE_JOBS");
    verify->add_option("--format", verify_args.format, "json or csv")->envname("DAEHEE_FORMAT");

    VolkenbornArgs volkenborn_args;
    auto* volkenborn = app.add_subcommand("volkenborn", "probe Volkenborn partial-sum convergence");
    volkenborn->add_option("--n", volkenborn_args.n, "degree of the falling-factorial integrand")
        ->envname("DAEHEE_N");
    volkenborn->add_option("--k", volkenborn_args.k, "number of integration variables");
    volkenborn->add_option("--p", volkenborn_args.p, "prime");
    volkenborn->add_option("--depths", volkenborn_args.depths, "depth range 'a..b' or single depth");
    volkenborn->add_option("--budget", volkenborn_args.budget, "literal evaluation budget")
        ->envname("DAEHEE_BUDGET");
    volkenborn->add_flag("--literal-only", volkenborn_args.literal_only,
                         "fail instead of switching to closed-form sums over budget");
    volkenborn->add_option("--format", volkenborn_args.format, "json or csv")
        ->envname("DAEHEE_FORMAT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!config_path.empty()) {
            const auto sections = read_config(config_path);
            if (table->parsed()) {
                const ConfigLayer layer(table, sections);
                layer.fill_integer("--n-max", "n-max", table_args.n_max);
                layer.fill_integer("--k", "k", table_args.k);
                layer.fill("--format", "format", table_args.format);
            } else if (poly->parsed()) {
                const ConfigLayer layer(poly, sections);
                layer.fill_integer("--n", "n", poly_args.n);
                layer.fill_integer("--k", "k", poly_args.k);
                layer.fill("--format", "format", poly_args.format);
            } else if (verify->parsed()) {
                const ConfigLayer layer(verify, sections);
                layer.fill("--ids", "ids", verify_args.ids);
                layer.fill_integer("--n-max", "n-max", verify_args.n_max);
                layer.fill_integer("--k-max", "k-max", verify_args.k_max);
                layer.fill("--x-samples", "x-samples", verify_args.x_samples);
                layer.fill_integer("--jobs", "jobs", verify_args.jobs);
                layer.fill("--format", "format", verify_args.format);
            } else if (volkenborn->parsed()) {
                const ConfigLayer layer(volkenborn, sections);
                layer.fill_integer("--n", "n", volkenborn_args.n);
                layer.fill_integer("--k", "k", volkenborn_args.k);
                layer.fill_integer("--p", "p", volkenborn_args.p);
                layer.fill("--depths", "depths", volkenborn_args.depths);
                layer.fill_integer("--budget", "budget", volkenborn_args.budget);
                layer.fill_bool("--literal-only", "literal-only", volkenborn_args.literal_only);
                layer.fill("--format", "format", volkenborn_args.format);
            }
        }

        if (table->parsed()) {
            if (const int rc = check_format(table_args.format)) return rc;
            return run_table(table_args);
        }
        if (poly->parsed()) {
            if (const int rc = check_format(poly_args.format)) return rc;
            return run_poly(poly_args);
        }
        if (verify->parsed()) {
            if (const int rc = check_format(verify_args.format)) return rc;
            return run_verify(verify_args);
        }
        if (volkenborn->parsed()) {
            if (const int rc = check_format(volkenborn_args.format)) return rc;
            return run_volkenborn(volkenborn_args);
        }
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return usage_error("no subcommand given");
}
