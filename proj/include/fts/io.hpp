#pragma once

#include "fts/degree.hpp"
#include "fts/distribution.hpp"
#include "fts/metric.hpp"
#include "fts/partition.hpp"
#include "fts/system.hpp"
#include "fts/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fts::io {

/// System document (JSON): {"states": [..], "labels": [..],
/// "transitions": [{"from": s, "label": a, "to": {state: degree-string}}]}.
/// Degrees travel as strings so values stay exact.
Validated<System> parse_system_text(const std::string& text);
Validated<System> load_system(const std::string& path);
std::string serialize_system(const System& sys);

/// Metric document: {"states": [..], "distances": [{"pair": [s, t],
/// "value": degree-string}]}. Unlisted pairs are 0; the three
/// pseudo-ultrametric axioms are checked exactly.
struct MetricDocument {
    std::vector<std::string> states;
    StateMetric metric;
};
Validated<MetricDocument> parse_metric_text(const std::string& text);
Validated<MetricDocument> load_metric(const std::string& path);

/// Named-distribution document: {"states": [..],
/// "distributions": {name: {state: degree-string}}}.
struct NamedDistributions {
    std::vector<std::string> states;
    std::vector<std::pair<std::string, Distribution>> entries;

    const Distribution* find(const std::string& name) const;
};
Validated<NamedDistributions> parse_distributions_text(const std::string& text);
Validated<NamedDistributions> load_distributions(const std::string& path);

/// Full square matrix as TSV with a header row and row labels; states render
/// in declaration order, degrees as shortest exact decimal or "p/q".
std::string matrix_tsv(const std::vector<std::string>& names,
                       const std::function<Degree(std::size_t, std::size_t)>& value);

/// Same matrix as a JSON object {"states": [..], "matrix": [[..]]}.
std::string matrix_json(const std::vector<std::string>& names,
                        const std::function<Degree(std::size_t, std::size_t)>& value);

/// Distance output with the iterate trace: {"applications": n,
/// "iterates": [matrix..], "result": matrix}.
std::string trace_json(const std::vector<std::string>& names,
                       const std::vector<StateMetric>& iterates,
                       std::size_t applications, const StateMetric& result);

/// One block per line, members in declaration order: "{s2,s3}".
std::string partition_text(const std::vector<std::string>& names, const Partition& p);

std::string read_file(const std::string& path); // throws Error on I/O failure
void write_file(const std::string& path, const std::string& content);

} // namespace fts::io
