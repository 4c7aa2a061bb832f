#include "fts/cli.hpp"

#include "fts/compose.hpp"
#include "fts/fixpoint.hpp"
#include "fts/io.hpp"
#include "fts/lifting.hpp"

#include "CLI11.hpp"

#include <functional>
#include <optional>

namespace fts::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

void print_diagnostics(std::ostream& err, const std::vector<Diagnostic>& errors,
                       const std::vector<Diagnostic>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w.message << "\n";
    for (const auto& e : errors) err << "error: " << e.message << "\n";
}

std::optional<System> load_or_report(const std::string& path, std::ostream& err) {
    auto loaded = io::load_system(path);
    print_diagnostics(err, loaded.errors, loaded.warnings);
    if (!loaded.ok()) return std::nullopt;
    return std::move(*loaded.value);
}

Degree parse_degree_or_throw(const std::string& text, const std::string& what) {
    const auto deg = Degree::parse(text);
    if (!deg) throw Error(what + " \"" + text + "\" is not an exact degree in [0, 1]");
    return *deg;
}

StateId state_or_throw(const System& sys, const std::string& name) {
    const auto id = sys.state_id(name);
    if (!id) throw Error("unknown state \"" + name + "\"");
    return *id;
}

std::string render_metric(const System& sys, const StateMetric& d, const std::string& format) {
    auto value = [&](std::size_t i, std::size_t j) { return d(i, j); };
    return format == "json" ? io::matrix_json(sys.states(), value)
                            : io::matrix_tsv(sys.states(), value);
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
    auto loaded = io::load_system(file);
    print_diagnostics(err, loaded.errors, loaded.warnings);
    if (!loaded.ok()) return kDomainError;
    out << "ok: " << loaded.value->state_count() << " states, "
        << loaded.value->label_count() << " labels\n";
    return kOk;
}

int cmd_distance(const std::string& file, const std::string& format, bool trace,
                 std::ostream& out, std::ostream& err) {
    const auto sys = load_or_report(file, err);
    if (!sys) return kDomainError;
    const FixpointRun run = behavioral_distance_run(*sys, trace);

    if (!trace) {
        out << render_metric(*sys, run.metric, format);
        return kOk;
    }
    if (format == "json") {
        out << io::trace_json(sys->states(), run.iterates, run.applications, run.metric);
        return kOk;
    }
    for (std::size_t i = 0; i < run.iterates.size(); ++i) {
        out << "# d" << i << "\n";
        out << render_metric(*sys, run.iterates[i], format);
    }
    out << "# applications\t" << run.applications << "\n";
    out << render_metric(*sys, run.metric, format);
    return kOk;
}

int cmd_quotient(const std::string& file, const std::string& lambda_text, std::ostream& out,
                 std::ostream& err) {
    const auto sys = load_or_report(file, err);
    if (!sys) return kDomainError;
    const Degree lambda = parse_degree_or_throw(lambda_text, "lambda");
    out << io::partition_text(sys->states(), quotient(*sys, lambda));
    return kOk;
}

int cmd_bisim(const std::string& file, const std::string& s_name, const std::string& t_name,
              std::ostream& out, std::ostream& err) {
    const auto sys = load_or_report(file, err);
    if (!sys) return kDomainError;
    const StateId s = state_or_throw(*sys, s_name), t = state_or_throw(*sys, t_name);
    const StateMetric d = behavioral_distance(*sys);
    out << (d(s, t).is_zero() ? "bisimilar" : "not-bisimilar") << '\t' << d(s, t).str()
        << '\n';
    return kOk;
}

int cmd_similar(const std::string& file, const std::string& format, std::ostream& out,
                std::ostream& err) {
    const auto sys = load_or_report(file, err);
    if (!sys) return kDomainError;
    const auto matrix = similarity(*sys);
    auto value = [&](std::size_t i, std::size_t j) { return matrix[i][j]; };
    out << (format == "json" ? io::matrix_json(sys->states(), value)
                             : io::matrix_tsv(sys->states(), value));
    return kOk;
}

int cmd_compose(const std::string& file, const std::string& op, const std::string& out_path,
                const std::vector<std::string>& from, std::ostream& out, std::ostream& err) {
    const auto sys = load_or_report(file, err);
    if (!sys) return kDomainError;

    System composed =
        op == "product" ? product_composition(*sys) : parallel_composition(*sys);
    if (!from.empty()) {
        const StateId left = state_or_throw(*sys, from[0]);
        const StateId right = state_or_throw(*sys, from[1]);
        const StateId start = static_cast<StateId>(left * sys->state_count() + right);
        composed = reachable_subsystem(composed, start);
    }

    const std::string text = io::serialize_system(composed);
    if (out_path.empty()) out << text;
    else io::write_file(out_path, text);
    return kOk;
}

int cmd_lift(const std::string& file, const std::string& mu_name, const std::string& eta_name,
             const std::string& metric_path, std::ostream& out, std::ostream& err) {
    auto dists = io::load_distributions(file);
    print_diagnostics(err, dists.errors, dists.warnings);
    if (!dists.ok()) return kDomainError;

    auto metric = io::load_metric(metric_path);
    print_diagnostics(err, metric.errors, metric.warnings);
    if (!metric.ok()) return kDomainError;

    if (metric.value->states != dists.value->states)
        throw Error("metric file and distribution file declare different state lists");

    const Distribution* mu = dists.value->find(mu_name);
    const Distribution* eta = dists.value->find(eta_name);
    if (!mu) throw Error("no distribution named \"" + mu_name + "\"");
    if (!eta) throw Error("no distribution named \"" + eta_name + "\"");

    out << lifted_distance(metric.value->metric, *mu, *eta).str() << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Behavioral distances for finite fuzzy-transition systems"};
    app.name("ftsdist");
    app.require_subcommand(1);

    std::string file, format = "tsv", lambda, s_name, t_name;
    std::string op, out_path, mu_name, eta_name, metric_path;
    std::vector<std::string> from;
    bool trace = false;

    auto* validate = app.add_subcommand("validate", "Check a system document");
    validate->add_option("file", file)->required();

    auto* distance = app.add_subcommand("distance", "Behavioral distance matrix");
    distance->add_option("file", file)->required();
    distance->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    distance->add_flag("--trace", trace, "also print every iterate");

    auto* quotient_cmd = app.add_subcommand("quotient", "Threshold partition");
    quotient_cmd->add_option("file", file)->required();
    quotient_cmd->add_option("--lambda", lambda)->required();

    auto* bisim = app.add_subcommand("bisim", "Bisimilarity of two states");
    bisim->add_option("file", file)->required();
    bisim->add_option("s", s_name)->required();
    bisim->add_option("t", t_name)->required();

    auto* similar = app.add_subcommand("similar", "Similarity matrix (1 - distance)");
    similar->add_option("file", file)->required();
    similar->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    auto* compose = app.add_subcommand("compose", "Parallel or product composition");
    compose->add_option("file", file)->required();
    compose->add_option("--op", op)->required()->check(CLI::IsMember({"parallel", "product"}));
    compose->add_option("--out", out_path);
    compose->add_option("--from", from, "restrict to states reachable from a pair")
        ->expected(2);

    auto* lift = app.add_subcommand("lift", "Lifted distance between two named distributions");
    lift->add_option("file", file)->required();
    lift->add_option("--mu", mu_name)->required();
    lift->add_option("--eta", eta_name)->required();
    lift->add_option("--metric", metric_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, out, err);
        if (distance->parsed()) return cmd_distance(file, format, trace, out, err);
        if (quotient_cmd->parsed()) return cmd_quotient(file, lambda, out, err);
        if (bisim->parsed()) return cmd_bisim(file, s_name, t_name, out, err);
        if (similar->parsed()) return cmd_similar(file, format, out, err);
        if (compose->parsed()) return cmd_compose(file, op, out_path, from, out, err);
        if (lift->parsed()) return cmd_lift(file, mu_name, eta_name, metric_path, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

} // namespace fts::cli
