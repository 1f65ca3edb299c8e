#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "criteria.hpp"
#include "gravheun/errors.hpp"
#include "gravheun/hermite_series.hpp"
#include "gravheun/heun_gravity.hpp"
#include "gravheun/ho_spectrum.hpp"
#include "gravheun/parallel.hpp"
#include "gravheun/reduction.hpp"
#include "gravheun/specfun.hpp"
#include "json.hpp"

namespace gravheun::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::pair<double, double> real_range(const std::string& s) {
    const auto colon = s.find(':');
    return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

std::pair<int, int> int_range(const std::string& s) {
    const auto colon = s.find(':');
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

// Shortest round-trip form, always with a decimal point or exponent.
std::string shortest(double x) {
    if (!std::isfinite(x)) return format_double(x);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

Table eigen_table(const std::vector<EigenRecord>& recs) {
    Table t({{"index"}, {"c"}, {"lambda"}, {"E_over_hbar_omega"}, {"residual"}, {"method"}, {"tags", true}});
    for (const auto& r : recs) {
        t.add_row({static_cast<std::int64_t>(r.index), r.c, r.lambda, r.E_over_hbar_omega, r.residual,
                   std::string(to_string(r.method)), r.tags});
    }
    return t;
}

Table gravity_table(const std::vector<GravityEigen>& recs) {
    Table t({{"index"}, {"c"}, {"lambda"}, {"K"}, {"residual_det"}, {"residual_shoot"}, {"method"}, {"tags", true}});
    for (const auto& g : recs) {
        t.add_row({static_cast<std::int64_t>(g.record.index), g.record.c, g.record.lambda, g.K, g.record.residual,
                   g.residual_shoot, std::string(to_string(g.record.method)), g.record.tags});
    }
    return t;
}

Table cmd_reduce(const RunConfig& cfg) {
    PhysicalSystem sys;
    sys.m1 = cfg.number("m1");
    sys.m2 = cfg.number("m2");
    sys.k = cfg.number("k");
    sys.a = cfg.number("a");
    sys.G = cfg.number("G");
    sys.hbar = cfg.number("hbar");
    const auto rp = reduce_system(sys);
    Table t({{"M"}, {"mu"}, {"l"}, {"omega"}, {"b"}, {"K"}, {"length_scale"}});
    t.add_row({rp.M, rp.mu, rp.l, rp.omega, rp.b, rp.K, rp.length_scale()});
    return t;
}

Table cmd_eigen(const RunConfig& cfg) {
    const double b = cfg.number("b");
    const std::string mode = cfg.get("mode");
    if (mode == "exact") {
        const auto [lo, hi] = int_range(cfg.get("m-range"));
        return eigen_table(exact_eigenvalues(b, lo, hi));
    }
    const auto [lo, hi] = real_range(cfg.get("c-range"));
    if (mode == "numeric") return eigen_table(numeric_eigenvalues(b, lo, hi, cfg.number("tol")));
    return eigen_table(fd_oracle_eigenvalues(b, lo, hi, static_cast<int>(cfg.integer("intervals"))));
}

Table cmd_eigen_gravity(const RunConfig& cfg) {
    GravityScanOptions opt;
    opt.grid_step = cfg.number("grid-step");
    opt.cross_check = cfg.flag("oracle");
    const auto [lo, hi] = real_range(cfg.get("c-range"));
    return gravity_table(eigen_gravity(cfg.number("b"), cfg.number("K"), lo, hi, cfg.number("tol"), opt));
}

Table cmd_quantized_K(const RunConfig& cfg) {
    const double b = cfg.number("b");
    const auto [lo, hi] = int_range(cfg.get("m-range"));
    Table t({{"n"}, {"m"}, {"K"}});
    for (long long n = 0; n <= cfg.integer("n-max"); ++n)
        for (int m = lo; m <= hi; ++m)
            t.add_row({static_cast<std::int64_t>(n), static_cast<std::int64_t>(m), quantized_K(b, static_cast<int>(n), m)});
    return t;
}

void write_to(const RunConfig& cfg, std::ostream& out, const std::vector<Table>& tables) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) throw IoError("cannot open output file " + cfg.output);
        os = &file;
    }
    if (cfg.format == Format::json && tables.size() > 1) {
        // several tables: one JSON array per table, wrapped in an array
        *os << "[\n";
        for (std::size_t i = 0; i < tables.size(); ++i) {
            write_json(tables[i], *os);
            if (i + 1 < tables.size()) *os << ",\n";
        }
        *os << "]\n";
    } else {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) *os << '\n';
            write_table(tables[i], cfg.format, *os);
        }
    }
    os->flush();
    if (!*os) throw IoError("write failed" + (cfg.output.empty() ? std::string() : " for " + cfg.output));
}

int cmd_heunb(const RunConfig& cfg, std::ostream& out) {
    std::vector<double> v;
    std::istringstream is(cfg.get("params"));
    for (std::string part; std::getline(is, part, ',');) v.push_back(std::stod(part));
    const HeunBParams p{v[0], v[1], v[2], v[3], v[4]};
    const auto r = heunb_eval_detailed(p, std::stoi(cfg.get("sigma")), cfg.number("x"));
    if (cfg.format == Format::text) {
        std::ostringstream os;
        os << shortest(r.value) << '\n' << "terms " << r.terms << '\n';
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.output.empty()) {
            file.open(cfg.output, std::ios::binary);
            if (!file) throw IoError("cannot open output file " + cfg.output);
            sink = &file;
        }
        *sink << os.str();
        sink->flush();
        if (!*sink) throw IoError("write failed for " + (cfg.output.empty() ? std::string("stdout") : cfg.output));
        return 0;
    }
    Table t({{"x"}, {"sigma"}, {"value"}, {"terms"}});
    t.add_row({cfg.number("x"), static_cast<std::int64_t>(std::stoi(cfg.get("sigma"))), r.value,
               static_cast<std::int64_t>(r.terms)});
    write_to(cfg, out, {t});
    return 0;
}

int cmd_hermite(const RunConfig& cfg, std::ostream& out) {
    const double b = cfg.number("b"), K = cfg.number("K"), c = cfg.number("c");
    const HeunBParams p = map_params(b, c, K).first;
    const auto h = recurrence_coeffs(p, b, K, cfg.number("c0"), static_cast<int>(cfg.integer("N")));
    Table coeffs({{"n"}, {"alpha_n"}, {"c_n"}});
    for (int n = 0; n <= h.N; ++n)
        coeffs.add_row({static_cast<std::int64_t>(n), h.alpha_n(n), h.coeffs[static_cast<std::size_t>(n)]});
    std::vector<Table> tables{coeffs};
    if (cfg.flag("residual")) {
        Table prof({{"x"}, {"y"}, {"residual"}, {"tail_ratio"}, {"non_convergent"}});
        const auto points = cfg.integer("points");
        for (long long i = 0; i < points; ++i) {
            const double x = points == 1 ? 0.0 : -b + 2.0 * b * static_cast<double>(i) / static_cast<double>(points - 1);
            const auto v = expansion_eval_detailed(h, x);
            prof.add_row({x, v.value, expansion_residual(h, p, {x}), v.tail_ratio, v.non_convergent});
        }
        tables.push_back(prof);
    }
    write_to(cfg, out, tables);
    return 0;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
    const auto rep = identity_battery(static_cast<std::uint64_t>(cfg.integer("seed")), static_cast<int>(cfg.integer("trials")));
    Table t({{"identity"}, {"max_residual"}, {"worst_nu"}, {"worst_z"}, {"gated"}, {"statement", true}});
    for (const auto& r : rep.results) t.add_row({r.name, r.max_residual, r.worst_nu, r.worst_z, r.gated, r.statement});
    write_to(cfg, out, {t});
    return rep.max_gated_residual() < cfg.number("max-residual") ? 0 : 1;
}

std::vector<int> criteria_ids(const std::string& spec) {
    std::vector<int> ids;
    if (spec == "all") {
        for (int i = 1; i <= acceptance::kCriterionCount; ++i) ids.push_back(i);
        return ids;
    }
    std::set<int> seen;
    std::istringstream is(spec);
    for (std::string part; std::getline(is, part, ',');) {
        int id = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), id);
        if (res.ec != std::errc() || res.ptr != part.data() + part.size() || id < 1 || id > acceptance::kCriterionCount)
            throw UsageError("--criteria: expected 'all' or ids in 1.." + std::to_string(acceptance::kCriterionCount) +
                             " (got '" + part + "')");
        if (seen.insert(id).second) ids.push_back(id);
    }
    return ids;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
    namespace fs = std::filesystem;
    const auto ids = criteria_ids(cfg.get("criteria"));
    const fs::path dir = cfg.get("out-dir");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    const Format f = cfg.format == Format::json ? Format::json : Format::csv;
    const std::string ext = f == Format::json ? ".json" : ".csv";
    const auto seed = static_cast<std::uint64_t>(cfg.integer("seed"));

    Table summary({{"criterion"}, {"status"}, {"title"}, {"detail"}});
    for (int id : ids) {
        const auto r = acceptance::run_criterion(id, seed);
        const fs::path path = dir / ("criterion_" + std::to_string(id) + ext);
        std::ofstream file(path, std::ios::binary);
        if (!file) throw IoError("cannot open output file " + path.string());
        write_table(r.table, f, file);
        if (!file.flush()) throw IoError("write failed for " + path.string());
        summary.add_row({static_cast<std::int64_t>(id), std::string(r.checks_passed ? "PASS" : "FAIL"), r.title, r.detail});
    }
    const fs::path spath = dir / ("summary" + ext);
    std::ofstream sfile(spath, std::ios::binary);
    if (!sfile) throw IoError("cannot open output file " + spath.string());
    write_table(summary, f, sfile);
    if (!sfile.flush()) throw IoError("write failed for " + spath.string());

    RunConfig shown = cfg;
    shown.format = cfg.format_given ? cfg.format : Format::text;
    write_to(shown, out, {summary});
    return 0;
}

void report(std::ostream& err, const RunConfig& cfg, const std::string& kind, const std::string& message,
            const nlohmann::json& extra = nlohmann::json::object()) {
    if (cfg.format == Format::json) {
        nlohmann::ordered_json rec;
        rec["error"] = kind;
        rec["message"] = message;
        for (const auto& [k, v] : extra.items()) rec[k] = v;
        err << rec.dump() << '\n';
    } else {
        err << "gravheun: " << kind << ": " << message << '\n';
    }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.threads >= 0) set_thread_count(static_cast<unsigned>(cfg.threads));
        switch (cfg.subcommand) {
            case Subcommand::reduce: write_to(cfg, out, {cmd_reduce(cfg)}); return 0;
            case Subcommand::identities: return cmd_identities(cfg, out);
            case Subcommand::eigen: write_to(cfg, out, {cmd_eigen(cfg)}); return 0;
            case Subcommand::eigen_gravity: write_to(cfg, out, {cmd_eigen_gravity(cfg)}); return 0;
            case Subcommand::heunb: return cmd_heunb(cfg, out);
            case Subcommand::hermite_expand: return cmd_hermite(cfg, out);
            case Subcommand::quantized_K: write_to(cfg, out, {cmd_quantized_K(cfg)}); return 0;
            case Subcommand::reproduce: return cmd_reproduce(cfg, out);
        }
    } catch (const ResonanceError& e) {
        report(err, cfg, "resonance", e.what(), {{"index", e.index()}, {"obstruction", e.obstruction()}});
    } catch (const RecurrenceBreakdown& e) {
        report(err, cfg, "recurrence_breakdown", e.what(), {{"index", e.index()}});
    } catch (const ConvergenceError& e) {
        report(err, cfg, "non_convergence", e.what(), {{"terms", e.terms()}});
    } catch (const StepUnderflow& e) {
        report(err, cfg, "step_underflow", e.what(), {{"x", e.where()}});
    } catch (const PoleError& e) {
        report(err, cfg, "pole", e.what());
    } catch (const NumericalError& e) {
        report(err, cfg, "numerical", e.what());
    } catch (const IoError& e) {
        report(err, cfg, "io", e.what());
    } catch (const UsageError& e) {
        report(err, cfg, "usage", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        report(err, cfg, "usage", e.what());
        return 2;
    }
    return 1;
}

}  // namespace gravheun::cli
