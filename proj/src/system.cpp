#include "fts/system.hpp"

#include "fts/degree.hpp"

#include <algorithm>
#include <cassert>

namespace fts {

namespace {

using NameIndex = std::vector<std::pair<std::string, std::uint32_t>>;

NameIndex index_names(const std::vector<std::string>& names) {
    NameIndex index;
    index.reserve(names.size());
    for (std::uint32_t i = 0; i < names.size(); ++i) index.emplace_back(names[i], i);
    std::sort(index.begin(), index.end());
    return index;
}

std::optional<std::uint32_t> lookup(const NameIndex& index, std::string_view name) {
    const auto it = std::lower_bound(
        index.begin(), index.end(), name,
        [](const auto& entry, std::string_view v) { return entry.first < v; });
    if (it != index.end() && it->first == name) return it->second;
    return std::nullopt;
}

void sort_unique(std::vector<Distribution>& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

} // namespace

Validated<System> System::validate(const RawSystem& raw) {
    Validated<System> out;

    if (raw.states.empty()) out.errors.push_back({"state list is empty"});
    if (raw.labels.empty()) out.errors.push_back({"label list is empty"});

    auto check_duplicates = [&](const std::vector<std::string>& names, const char* kind) {
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1] && (i == 1 || sorted[i] != sorted[i - 2]))
                out.errors.push_back(
                    {std::string("duplicate ") + kind + " id \"" + sorted[i] + "\""});
    };
    check_duplicates(raw.states, "state");
    check_duplicates(raw.labels, "label");
    if (!out.errors.empty()) return out;

    const NameIndex state_index = index_names(raw.states);
    const NameIndex label_index = index_names(raw.labels);
    const std::size_t n = raw.states.size(), m = raw.labels.size();
    std::vector<std::vector<Distribution>> delta(n * m);

    for (std::size_t ti = 0; ti < raw.transitions.size(); ++ti) {
        const RawTransition& tr = raw.transitions[ti];
        const std::string where = "transition #" + std::to_string(ti + 1) + " (" +
                                  tr.from + ", " + tr.label + ")";

        const auto from = lookup(state_index, tr.from);
        if (!from) {
            out.errors.push_back({where + ": unknown source state \"" + tr.from + "\""});
            continue;
        }
        const auto label = lookup(label_index, tr.label);
        if (!label) {
            out.errors.push_back({where + ": unknown label \"" + tr.label + "\""});
            continue;
        }

        std::vector<Distribution::Entry> entries;
        std::vector<StateId> seen_targets;
        bool bad = false;
        for (const auto& [target, literal] : tr.to) {
            const auto to = lookup(state_index, target);
            if (!to) {
                out.errors.push_back({where + ": unknown target state \"" + target + "\""});
                bad = true;
                continue;
            }
            if (std::find(seen_targets.begin(), seen_targets.end(), *to) !=
                seen_targets.end()) {
                out.errors.push_back({where + ": target \"" + target + "\" listed twice"});
                bad = true;
                continue;
            }
            seen_targets.push_back(*to);
            const auto deg = Degree::parse(literal);
            if (!deg) {
                out.errors.push_back({where + ": degree \"" + literal + "\" for target \"" +
                                      target + "\" is not an exact value in [0, 1]"});
                bad = true;
                continue;
            }
            if (!deg->is_zero()) entries.emplace_back(*to, *deg);
        }
        if (bad) continue;

        auto& set = delta[*from * m + *label];
        Distribution dist = Distribution::from_pairs(std::move(entries));
        if (std::find(set.begin(), set.end(), dist) != set.end())
            out.warnings.push_back({where + ": duplicate alternative ignored (delta is a set)"});
        else
            set.push_back(std::move(dist));
    }
    if (!out.errors.empty()) return out;

    for (auto& set : delta) sort_unique(set);

    System sys;
    sys.states_ = raw.states;
    sys.labels_ = raw.labels;
    sys.delta_ = std::move(delta);
    sys.state_index_ = state_index;
    sys.label_index_ = label_index;
    out.value = std::move(sys);
    return out;
}

System System::unchecked(std::vector<std::string> states,
                         std::vector<std::string> labels,
                         std::vector<std::vector<Distribution>> delta) {
    assert(delta.size() == states.size() * labels.size());
    for (auto& set : delta) sort_unique(set);
    System sys;
    sys.state_index_ = index_names(states);
    sys.label_index_ = index_names(labels);
    sys.states_ = std::move(states);
    sys.labels_ = std::move(labels);
    sys.delta_ = std::move(delta);
    return sys;
}

std::optional<StateId> System::state_id(std::string_view name) const {
    return lookup(state_index_, name);
}

std::optional<LabelId> System::label_id(std::string_view name) const {
    return lookup(label_index_, name);
}

std::vector<Degree> System::degree_values() const {
    std::vector<Degree> values;
    for (const auto& set : delta_)
        for (const auto& dist : set)
            for (const auto& [s, deg] : dist) values.push_back(deg);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace fts
