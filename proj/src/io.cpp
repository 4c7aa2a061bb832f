#include "fts/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace fts::io {

using nlohmann::ordered_json;

namespace {

bool string_array(const ordered_json& j, std::vector<std::string>& out,
                  const char* field, std::vector<Diagnostic>& errors) {
    if (!j.is_array()) {
        errors.push_back({std::string(field) + " must be an array of strings"});
        return false;
    }
    for (const auto& item : j) {
        if (!item.is_string()) {
            errors.push_back({std::string(field) + " must contain only strings"});
            return false;
        }
        out.push_back(item.get<std::string>());
    }
    return true;
}

} // namespace

Validated<System> parse_system_text(const std::string& text) {
    Validated<System> out;
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        out.errors.push_back({std::string("not valid JSON: ") + e.what()});
        return out;
    }
    if (!doc.is_object()) {
        out.errors.push_back({"document must be a JSON object"});
        return out;
    }

    RawSystem raw;
    if (!doc.contains("states") || !string_array(doc["states"], raw.states, "states", out.errors))
        return out;
    if (!doc.contains("labels") || !string_array(doc["labels"], raw.labels, "labels", out.errors))
        return out;

    if (doc.contains("transitions")) {
        if (!doc["transitions"].is_array()) {
            out.errors.push_back({"transitions must be an array"});
            return out;
        }
        std::size_t index = 0;
        for (const auto& rec : doc["transitions"]) {
            ++index;
            const std::string where = "transition #" + std::to_string(index);
            if (!rec.is_object() || !rec.contains("from") || !rec.contains("label") ||
                !rec.contains("to") || !rec["from"].is_string() || !rec["label"].is_string() ||
                !rec["to"].is_object()) {
                out.errors.push_back(
                    {where + ": expected {\"from\": state, \"label\": label, "
                             "\"to\": {state: degree}}"});
                return out;
            }
            RawTransition tr;
            tr.from = rec["from"].get<std::string>();
            tr.label = rec["label"].get<std::string>();
            for (const auto& [state, degree] : rec["to"].items()) {
                if (!degree.is_string()) {
                    out.errors.push_back({where + ": degree for \"" + state +
                                          "\" must be a string literal"});
                    return out;
                }
                tr.to.emplace_back(state, degree.get<std::string>());
            }
            raw.transitions.push_back(std::move(tr));
        }
    }

    return System::validate(raw);
}

Validated<System> load_system(const std::string& path) {
    try {
        return parse_system_text(read_file(path));
    } catch (const Error& e) {
        Validated<System> out;
        out.errors.push_back({e.what()});
        return out;
    }
}

std::string serialize_system(const System& sys) {
    ordered_json doc;
    doc["states"] = sys.states();
    doc["labels"] = sys.labels();
    ordered_json transitions = ordered_json::array();
    for (StateId s = 0; s < sys.state_count(); ++s)
        for (LabelId a = 0; a < sys.label_count(); ++a)
            for (const Distribution& d : sys.moves(s, a)) {
                ordered_json to = ordered_json::object();
                for (const auto& [t, deg] : d) to[sys.state_name(t)] = deg.str();
                transitions.push_back({{"from", sys.state_name(s)},
                                       {"label", sys.label_name(a)},
                                       {"to", std::move(to)}});
            }
    doc["transitions"] = std::move(transitions);
    return doc.dump(2) + "\n";
}

Validated<MetricDocument> parse_metric_text(const std::string& text) {
    Validated<MetricDocument> out;
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        out.errors.push_back({std::string("not valid JSON: ") + e.what()});
        return out;
    }
    if (!doc.is_object() || !doc.contains("states")) {
        out.errors.push_back({"metric document must be an object with \"states\""});
        return out;
    }

    std::vector<std::string> states;
    if (!string_array(doc["states"], states, "states", out.errors)) return out;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (!index.emplace(states[i], i).second) {
            out.errors.push_back({"duplicate state id \"" + states[i] + "\""});
            return out;
        }

    const std::size_t n = states.size();
    std::vector<std::vector<Degree>> matrix(n, std::vector<Degree>(n));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));

    if (doc.contains("distances")) {
        if (!doc["distances"].is_array()) {
            out.errors.push_back({"distances must be an array"});
            return out;
        }
        std::size_t rec_no = 0;
        for (const auto& rec : doc["distances"]) {
            ++rec_no;
            const std::string where = "distance #" + std::to_string(rec_no);
            if (!rec.is_object() || !rec.contains("pair") || !rec.contains("value") ||
                !rec["pair"].is_array() || rec["pair"].size() != 2 ||
                !rec["pair"][0].is_string() || !rec["pair"][1].is_string() ||
                !rec["value"].is_string()) {
                out.errors.push_back(
                    {where + ": expected {\"pair\": [s, t], \"value\": degree}"});
                return out;
            }
            const std::string s = rec["pair"][0], t = rec["pair"][1];
            const auto si = index.find(s), ti = index.find(t);
            if (si == index.end() || ti == index.end()) {
                out.errors.push_back({where + ": unknown state in pair (" + s + ", " + t + ")"});
                return out;
            }
            const auto value = Degree::parse(rec["value"].get<std::string>());
            if (!value) {
                out.errors.push_back({where + ": value \"" +
                                      rec["value"].get<std::string>() +
                                      "\" is not an exact degree in [0, 1]"});
                return out;
            }
            const std::size_t i = si->second, j = ti->second;
            if ((given[i][j] || given[j][i]) && matrix[i][j] != *value) {
                out.errors.push_back({where + ": conflicting value for pair (" + s + ", " +
                                      t + ")"});
                return out;
            }
            matrix[i][j] = matrix[j][i] = *value;
            given[i][j] = given[j][i] = true;
        }
    }

    auto checked = validate_metric(matrix, states);
    out.errors = std::move(checked.errors);
    if (checked.ok()) out.value = MetricDocument{std::move(states), std::move(*checked.value)};
    return out;
}

Validated<MetricDocument> load_metric(const std::string& path) {
    try {
        return parse_metric_text(read_file(path));
    } catch (const Error& e) {
        Validated<MetricDocument> out;
        out.errors.push_back({e.what()});
        return out;
    }
}

const Distribution* NamedDistributions::find(const std::string& name) const {
    for (const auto& [key, dist] : entries)
        if (key == name) return &dist;
    return nullptr;
}

Validated<NamedDistributions> parse_distributions_text(const std::string& text) {
    Validated<NamedDistributions> out;
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        out.errors.push_back({std::string("not valid JSON: ") + e.what()});
        return out;
    }
    if (!doc.is_object() || !doc.contains("states") || !doc.contains("distributions") ||
        !doc["distributions"].is_object()) {
        out.errors.push_back(
            {"expected an object with \"states\" and \"distributions\""});
        return out;
    }

    NamedDistributions result;
    if (!string_array(doc["states"], result.states, "states", out.errors)) return out;
    std::unordered_map<std::string, StateId> index;
    for (std::size_t i = 0; i < result.states.size(); ++i)
        if (!index.emplace(result.states[i], static_cast<StateId>(i)).second) {
            out.errors.push_back({"duplicate state id \"" + result.states[i] + "\""});
            return out;
        }

    for (const auto& [name, body] : doc["distributions"].items()) {
        if (!body.is_object()) {
            out.errors.push_back({"distribution \"" + name + "\" must map states to degrees"});
            return out;
        }
        std::vector<Distribution::Entry> entries;
        for (const auto& [state, literal] : body.items()) {
            const auto si = index.find(state);
            if (si == index.end()) {
                out.errors.push_back({"distribution \"" + name + "\": unknown state \"" +
                                      state + "\""});
                return out;
            }
            if (!literal.is_string()) {
                out.errors.push_back({"distribution \"" + name + "\": degree for \"" +
                                      state + "\" must be a string literal"});
                return out;
            }
            const auto deg = Degree::parse(literal.get<std::string>());
            if (!deg) {
                out.errors.push_back({"distribution \"" + name + "\": degree \"" +
                                      literal.get<std::string>() +
                                      "\" is not an exact value in [0, 1]"});
                return out;
            }
            if (!deg->is_zero()) entries.emplace_back(si->second, *deg);
        }
        result.entries.emplace_back(name, Distribution::from_pairs(std::move(entries)));
    }

    out.value = std::move(result);
    return out;
}

Validated<NamedDistributions> load_distributions(const std::string& path) {
    try {
        return parse_distributions_text(read_file(path));
    } catch (const Error& e) {
        Validated<NamedDistributions> out;
        out.errors.push_back({e.what()});
        return out;
    }
}

std::string matrix_tsv(const std::vector<std::string>& names,
                       const std::function<Degree(std::size_t, std::size_t)>& value) {
    std::ostringstream os;
    for (const auto& name : names) os << '\t' << name;
    os << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
        os << names[i];
        for (std::size_t j = 0; j < names.size(); ++j) os << '\t' << value(i, j).str();
        os << '\n';
    }
    return os.str();
}

namespace {

ordered_json matrix_object(const std::vector<std::string>& names,
                           const std::function<Degree(std::size_t, std::size_t)>& value) {
    ordered_json doc;
    doc["states"] = names;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < names.size(); ++j) row.push_back(value(i, j).str());
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc;
}

ordered_json metric_object(const std::vector<std::string>& names, const StateMetric& d) {
    return matrix_object(names, [&](std::size_t i, std::size_t j) { return d(i, j); });
}

} // namespace

std::string matrix_json(const std::vector<std::string>& names,
                        const std::function<Degree(std::size_t, std::size_t)>& value) {
    return matrix_object(names, value).dump(2) + "\n";
}

std::string trace_json(const std::vector<std::string>& names,
                       const std::vector<StateMetric>& iterates,
                       std::size_t applications, const StateMetric& result) {
    ordered_json doc;
    doc["applications"] = applications;
    ordered_json steps = ordered_json::array();
    for (const StateMetric& d : iterates) steps.push_back(metric_object(names, d));
    doc["iterates"] = std::move(steps);
    doc["result"] = metric_object(names, result);
    return doc.dump(2) + "\n";
}

std::string partition_text(const std::vector<std::string>& names, const Partition& p) {
    std::ostringstream os;
    for (const auto& block : p.blocks()) {
        os << '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) os << ',';
            os << names[block[i]];
        }
        os << "}\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot write \"" + path + "\"");
    os << content;
}

} // namespace fts::io
