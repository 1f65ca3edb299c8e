#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace gravheun::cli {

namespace {

enum class Kind { real, nonneg_real, pos_real, integer, nonneg_integer, pos_integer, range, int_range, params5, choice, flag, text };

struct OptionSpec {
    std::string name;
    Kind kind;
    std::string fallback;  // empty and not a flag: required
    std::string help;
    std::vector<std::string> choices{};
};

struct SubSpec {
    Subcommand sub;
    std::string name;
    std::string description;
    std::string footer;
    std::vector<OptionSpec> options;
};

const std::string kDimensionless = "All quantities are dimensionless (lengths in units of sqrt(hbar/(mu omega)), energies in hbar omega).";

const std::vector<SubSpec>& subcommands() {
    static const std::vector<SubSpec> specs = {
        {Subcommand::reduce, "reduce", "Reduce the two-mass spring system to (mu, l, omega, b, K)",
         "Inputs in any consistent unit system; b and K come out dimensionless, omega in 1/[time].",
         {{"m1", Kind::pos_real, "1", "first mass [mass]"},
          {"m2", Kind::pos_real, "1", "second mass [mass], must equal m1"},
          {"k", Kind::pos_real, "1", "spring constant of each of the three springs [mass/time^2]"},
          {"a", Kind::nonneg_real, "0", "natural spring length [length]"},
          {"G", Kind::nonneg_real, "0", "gravitational constant [length^3/(mass time^2)]"},
          {"hbar", Kind::pos_real, "1", "reduced Planck constant [mass length^2/time]"}}},
        {Subcommand::identities, "identities", "Run the special-function identity battery", kDimensionless,
         {{"trials", Kind::pos_integer, "500", "number of random (nu, z) draws"},
          {"seed", Kind::nonneg_integer, "1", "RNG seed"},
          {"max-residual", Kind::pos_real, "1e-9", "exit 1 if a gated residual reaches this (dimensionless)"}}},
        {Subcommand::eigen, "eigen", "Spectrum of psi'' + (c - q^2) psi = 0 with psi(-2b) = psi(0) = 0", kDimensionless,
         {{"b", Kind::nonneg_real, "", "dimensionless spring offset, b >= 0 (required)"},
          {"mode", Kind::choice, "exact", "exact lattice, determinant roots, or finite differences", {"exact", "numeric", "fd"}},
          {"m-range", Kind::int_range, "0:3", "LO:HI integer range of m for --mode exact"},
          {"c-range", Kind::range, "0:14", "LO:HI window in c (dimensionless) for numeric and fd"},
          {"tol", Kind::pos_real, "1e-10", "root tolerance in c (dimensionless)"},
          {"intervals", Kind::pos_integer, "2000", "grid cells for --mode fd"}}},
        {Subcommand::eigen_gravity, "eigen-gravity", "Eigenvalues of psi'' + (c + K/s - (s-b)^2) psi = 0 on [-b, b]",
         kDimensionless,
         {{"b", Kind::pos_real, "", "dimensionless spring offset, b > 0 (required)"},
          {"K", Kind::nonneg_real, "0", "dimensionless gravity strength, K >= 0"},
          {"c-range", Kind::range, "0:10", "LO:HI window in c (dimensionless)"},
          {"tol", Kind::pos_real, "1e-10", "root tolerance in c (dimensionless)"},
          {"grid-step", Kind::pos_real, "0.1", "scan step in c (dimensionless)"},
          {"oracle", Kind::flag, "", "also evaluate the shooting mismatch at every root"}}},
        {Subcommand::heunb, "heunb", "Evaluate the Frobenius solution of the biconfluent Heun equation", kDimensionless,
         {{"params", Kind::params5, "", "q_acc,alpha,gamma,delta,epsilon (required)"},
          {"x", Kind::real, "", "evaluation point (required)"},
          {"sigma", Kind::choice, "0", "Frobenius exponent", {"0", "1"}}}},
        {Subcommand::hermite_expand, "hermite-expand", "Hermite-function expansion coefficients of the gravity branch",
         kDimensionless,
         {{"b", Kind::pos_real, "", "dimensionless spring offset, b > 0 (required)"},
          {"K", Kind::nonneg_real, "", "dimensionless gravity strength (required)"},
          {"c", Kind::real, "", "spectral parameter c (required)"},
          {"N", Kind::nonneg_integer, "40", "truncation index"},
          {"c0", Kind::real, "1", "leading coefficient"},
          {"residual", Kind::flag, "", "append the equation residual profile on [-b, b]"},
          {"points", Kind::pos_integer, "41", "number of residual profile points"}}},
        {Subcommand::quantized_K, "quantized-K", "Lattice K = 2b|n - 2m|", kDimensionless,
         {{"b", Kind::pos_real, "", "dimensionless spring offset, b > 0 (required)"},
          {"n-max", Kind::nonneg_integer, "5", "largest n"},
          {"m-range", Kind::int_range, "-3:3", "LO:HI integer range of m (write --m-range=-3:3)"}}},
        {Subcommand::reproduce, "reproduce", "Regenerate every acceptance table into a directory",
         "One file per criterion plus summary; contents depend only on --seed. " + kDimensionless,
         {{"out-dir", Kind::text, "reproduce", "output directory"},
          {"seed", Kind::nonneg_integer, "1", "RNG seed for the randomized criteria"},
          {"criteria", Kind::text, "all", "comma-separated criterion ids or 'all'"}}},
    };
    return specs;
}

const SubSpec& spec_for(const std::string& name) {
    for (const auto& s : subcommands())
        if (s.name == name) return s;
    throw UsageError("unknown subcommand " + name);
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

bool parse_int(const std::string& s, long long& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

[[noreturn]] void bad(const OptionSpec& o, const std::string& why, const std::string& value) {
    throw UsageError("--" + o.name + ": " + why + " (got '" + value + "')");
}

std::string validate(const OptionSpec& o, const std::string& v) {
    double d = 0.0;
    long long n = 0;
    switch (o.kind) {
        case Kind::real:
            if (!parse_double(v, d)) bad(o, "expected a finite number", v);
            return v;
        case Kind::nonneg_real:
            if (!parse_double(v, d)) bad(o, "expected a finite number", v);
            if (d < 0.0) bad(o, "must be >= 0", v);
            return v;
        case Kind::pos_real:
            if (!parse_double(v, d)) bad(o, "expected a finite number", v);
            if (!(d > 0.0)) bad(o, "must be > 0", v);
            return v;
        case Kind::integer:
            if (!parse_int(v, n)) bad(o, "expected an integer", v);
            return v;
        case Kind::nonneg_integer:
            if (!parse_int(v, n)) bad(o, "expected an integer", v);
            if (n < 0) bad(o, "must be >= 0", v);
            return v;
        case Kind::pos_integer:
            if (!parse_int(v, n)) bad(o, "expected an integer", v);
            if (n < 1) bad(o, "must be >= 1", v);
            return v;
        case Kind::range: {
            const auto parts = split(v, ':');
            double lo = 0.0, hi = 0.0;
            if (parts.size() != 2 || !parse_double(parts[0], lo) || !parse_double(parts[1], hi))
                bad(o, "expected LO:HI", v);
            if (!(lo < hi)) bad(o, "needs LO < HI", v);
            return v;
        }
        case Kind::int_range: {
            const auto parts = split(v, ':');
            long long lo = 0, hi = 0;
            if (parts.size() != 2 || !parse_int(parts[0], lo) || !parse_int(parts[1], hi))
                bad(o, "expected integer LO:HI", v);
            if (lo > hi) bad(o, "needs LO <= HI", v);
            return v;
        }
        case Kind::params5: {
            const auto parts = split(v, ',');
            if (parts.size() != 5) bad(o, "expected five comma-separated numbers", v);
            for (const auto& p : parts)
                if (!parse_double(p, d)) bad(o, "expected five comma-separated numbers", v);
            return v;
        }
        case Kind::choice:
            for (const auto& c : o.choices)
                if (c == v) return v;
            bad(o, "not one of the allowed values", v);
        case Kind::flag:
            if (v != "true" && v != "false") bad(o, "expected true or false", v);
            return v;
        case Kind::text:
            if (v.empty()) bad(o, "must not be empty", v);
            return v;
    }
    return v;
}

std::string json_scalar(const nlohmann::json& j, const std::string& key) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number_float()) return format_double(j.get<double>());
    if (j.is_array()) {
        std::string joined;
        for (const auto& e : j) joined += (joined.empty() ? "" : ",") + json_scalar(e, key);
        return joined;
    }
    throw UsageError("--config: unsupported value for key '" + key + "'");
}

nlohmann::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("--config: cannot read " + path);
    try {
        auto j = nlohmann::json::parse(in);
        if (!j.is_object()) throw UsageError("--config: " + path + " must hold a JSON object");
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("--config: " + path + " is not valid JSON: " + e.what());
    }
}

Format parse_format(const std::string& v) {
    if (v == "csv") return Format::csv;
    if (v == "json") return Format::json;
    if (v == "text") return Format::text;
    throw UsageError("--format: expected csv, json or text (got '" + v + "')");
}

}  // namespace

std::string to_string(Subcommand s) {
    for (const auto& spec : subcommands())
        if (spec.sub == s) return spec.name;
    return "unknown";
}

const std::string& RunConfig::get(const std::string& key) const {
    const auto it = params.find(key);
    if (it == params.end()) throw std::out_of_range("RunConfig: no parameter " + key);
    return it->second;
}

double RunConfig::number(const std::string& key) const {
    double d = 0.0;
    if (!parse_double(get(key), d)) throw UsageError("--" + key + ": expected a finite number");
    return d;
}

long long RunConfig::integer(const std::string& key) const {
    long long n = 0;
    if (!parse_int(get(key), n)) throw UsageError("--" + key + ": expected an integer");
    return n;
}

bool RunConfig::flag(const std::string& key) const { return get(key) == "true"; }

RunConfig parse_args(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_args(args);
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"gravheun: spectra of the spring-coupled two-mass oscillator with and without gravity", "gravheun"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_raw, output, config_path;
    bool json_flag = false;
    int threads = -1;
    auto* fmt_opt = app.add_option("--format", format_raw, "output format: csv, json or text");
    app.add_flag("--json", json_flag, "same as --format json");
    auto* out_opt = app.add_option("--output,-o", output, "write to FILE instead of stdout");
    app.add_option("--config", config_path, "JSON object of parameters; command-line flags win");
    auto* thr_opt = app.add_option("--threads", threads, "worker threads for grid scans (0 = all cores)")
                        ->check(CLI::NonNegativeNumber);

    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<std::string, std::map<std::string, bool>> flags;
    std::map<std::string, std::map<std::string, CLI::Option*>> handles;
    for (const auto& spec : subcommands()) {
        auto* sub = app.add_subcommand(spec.name, spec.description);
        sub->footer(spec.footer);
        for (const auto& o : spec.options) {
            std::string help = o.help;
            if (!o.fallback.empty()) help += " [default " + o.fallback + "]";
            if (o.kind == Kind::flag) {
                handles[spec.name][o.name] = sub->add_flag("--" + o.name, flags[spec.name][o.name], help);
            } else {
                handles[spec.name][o.name] = sub->add_option("--" + o.name, raw[spec.name][o.name], help);
            }
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        app.exit(e, os, os);
        throw HelpRequested(os.str());
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream os;
        app.exit(e, os, os);
        throw HelpRequested(os.str());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const SubSpec& spec = spec_for(chosen->get_name());

    nlohmann::json cfg = nlohmann::json::object();
    if (!config_path.empty()) cfg = load_config(config_path);
    for (const auto& [key, value] : cfg.items()) {
        if (key == "format" || key == "output" || key == "threads") continue;
        if (key == "subcommand") {
            if (!value.is_string() || value.get<std::string>() != spec.name)
                throw UsageError("--config: subcommand '" + json_scalar(value, key) + "' does not match " + spec.name);
            continue;
        }
        bool known = false;
        for (const auto& o : spec.options) known = known || o.name == key;
        if (!known) throw UsageError("--config: unknown key '" + key + "' for " + spec.name);
    }

    RunConfig cfg_out;
    cfg_out.subcommand = spec.sub;
    for (const auto& o : spec.options) {
        std::string value;
        const bool on_cli = handles[spec.name][o.name]->count() > 0;
        if (on_cli) {
            value = o.kind == Kind::flag ? (flags[spec.name][o.name] ? "true" : "false") : raw[spec.name][o.name];
        } else if (cfg.contains(o.name)) {
            value = json_scalar(cfg.at(o.name), o.name);
        } else if (o.kind == Kind::flag) {
            value = "false";
        } else if (!o.fallback.empty()) {
            value = o.fallback;
        } else {
            throw UsageError("--" + o.name + " is required for " + spec.name);
        }
        cfg_out.params[o.name] = validate(o, value);
    }

    if (fmt_opt->count() > 0) {
        cfg_out.format = parse_format(format_raw);
        cfg_out.format_given = true;
    } else if (cfg.contains("format")) {
        cfg_out.format = parse_format(json_scalar(cfg.at("format"), "format"));
        cfg_out.format_given = true;
    }
    if (json_flag) {
        cfg_out.format = Format::json;
        cfg_out.format_given = true;
    }
    if (!cfg_out.format_given && (spec.sub == Subcommand::identities || spec.sub == Subcommand::heunb))
        cfg_out.format = Format::text;

    if (out_opt->count() > 0) cfg_out.output = output;
    else if (cfg.contains("output")) cfg_out.output = json_scalar(cfg.at("output"), "output");

    if (thr_opt->count() > 0) {
        cfg_out.threads = threads;
    } else if (cfg.contains("threads")) {
        long long n = 0;
        if (!parse_int(json_scalar(cfg.at("threads"), "threads"), n) || n < 0)
            throw UsageError("--threads: expected a non-negative integer");
        cfg_out.threads = static_cast<int>(n);
    }
    return cfg_out;
}

}  // namespace gravheun::cli
