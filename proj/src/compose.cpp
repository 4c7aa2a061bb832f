#include "fts/compose.hpp"

#include "fts/distribution.hpp"

#include <algorithm>
#include <deque>

namespace fts {

std::vector<LabelId> active_labels(const System& sys, StateId s) {
    std::vector<LabelId> out;
    for (LabelId a = 0; a < sys.label_count(); ++a) {
        const auto& set = sys.moves(s, a);
        if (std::any_of(set.begin(), set.end(),
                        [](const Distribution& d) { return !d.empty(); }))
            out.push_back(a);
    }
    return out;
}

std::string pair_state_name(const System& sys, StateId left, StateId right,
                            bool product) {
    return sys.state_name(left) + (product ? "||" : "|") + sys.state_name(right);
}

StateId pair_state_index(const System& sys, StateId left, StateId right) {
    return static_cast<StateId>(left * sys.state_count() + right);
}

namespace {

System compose(const System& sys, bool synchronous) {
    const std::size_t n = sys.state_count();
    const std::size_t labels = sys.label_count();

    for (const auto& name : sys.states())
        if (name.find('|') != std::string::npos)
            throw Error("state name \"" + name +
                        "\" contains the pair separator '|'; rename before composing");

    std::vector<std::string> pair_states;
    pair_states.reserve(n * n);
    for (StateId l = 0; l < n; ++l)
        for (StateId r = 0; r < n; ++r)
            pair_states.push_back(pair_state_name(sys, l, r, synchronous));

    std::vector<std::vector<bool>> active(n, std::vector<bool>(labels, false));
    for (StateId s = 0; s < n; ++s)
        for (LabelId a : active_labels(sys, s)) active[s][a] = true;

    std::vector<std::vector<Distribution>> delta(n * n * labels);
    for (StateId l = 0; l < n; ++l)
        for (StateId r = 0; r < n; ++r)
            for (LabelId a = 0; a < labels; ++a) {
                auto& set = delta[(l * n + r) * labels + a];
                const bool left_active = active[l][a], right_active = active[r][a];
                if (left_active && right_active) {
                    for (const Distribution& mu : sys.moves(l, a))
                        for (const Distribution& eta : sys.moves(r, a))
                            set.push_back(meet_product(mu, eta, n));
                } else if (synchronous) {
                    continue;
                } else if (left_active) {
                    const Distribution idle = Distribution::singleton(r);
                    for (const Distribution& mu : sys.moves(l, a))
                        set.push_back(meet_product(mu, idle, n));
                } else if (right_active) {
                    const Distribution idle = Distribution::singleton(l);
                    for (const Distribution& eta : sys.moves(r, a))
                        set.push_back(meet_product(idle, eta, n));
                }
            }

    return System::unchecked(std::move(pair_states),
                             std::vector<std::string>(sys.labels()), std::move(delta));
}

} // namespace

System parallel_composition(const System& sys) { return compose(sys, false); }

System product_composition(const System& sys) { return compose(sys, true); }

System reachable_subsystem(const System& sys, StateId from) {
    const std::size_t n = sys.state_count(), labels = sys.label_count();
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        for (LabelId a = 0; a < labels; ++a)
            for (const Distribution& d : sys.moves(s, a))
                for (const auto& [t, deg] : d)
                    if (!seen[t]) {
                        seen[t] = true;
                        queue.push_back(t);
                    }
    }

    std::vector<StateId> kept;
    std::vector<StateId> remap(n);
    std::vector<std::string> states;
    for (StateId s = 0; s < n; ++s)
        if (seen[s]) {
            remap[s] = static_cast<StateId>(kept.size());
            kept.push_back(s);
            states.push_back(sys.state_name(s));
        }

    std::vector<std::vector<Distribution>> delta(kept.size() * labels);
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (LabelId a = 0; a < labels; ++a)
            for (const Distribution& d : sys.moves(kept[i], a)) {
                std::vector<Distribution::Entry> entries;
                entries.reserve(d.support_size());
                for (const auto& [t, deg] : d) entries.emplace_back(remap[t], deg);
                delta[i * labels + a].push_back(
                    Distribution::from_pairs(std::move(entries)));
            }

    return System::unchecked(std::move(states), std::vector<std::string>(sys.labels()),
                             std::move(delta));
}

System disjoint_union(const System& a, const System& b) {
    std::vector<std::string> states = a.states();
    for (const auto& name : b.states()) {
        if (a.state_id(name))
            throw Error("state name \"" + name + "\" occurs in both systems");
        states.push_back(name);
    }

    std::vector<std::string> labels = a.labels();
    std::vector<LabelId> b_label(b.label_count());
    for (LabelId la = 0; la < b.label_count(); ++la) {
        const std::string& name = b.label_name(la);
        const auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
            b_label[la] = static_cast<LabelId>(labels.size());
            labels.push_back(name);
        } else {
            b_label[la] = static_cast<LabelId>(it - labels.begin());
        }
    }

    const std::size_t n = states.size(), m = labels.size();
    const StateId shift = static_cast<StateId>(a.state_count());
    std::vector<std::vector<Distribution>> delta(n * m);
    for (StateId s = 0; s < a.state_count(); ++s)
        for (LabelId la = 0; la < a.label_count(); ++la)
            delta[s * m + la] = a.moves(s, la);
    for (StateId s = 0; s < b.state_count(); ++s)
        for (LabelId la = 0; la < b.label_count(); ++la)
            for (const Distribution& d : b.moves(s, la)) {
                std::vector<Distribution::Entry> entries;
                for (const auto& [t, deg] : d)
                    entries.emplace_back(static_cast<StateId>(t + shift), deg);
                delta[(s + shift) * m + b_label[la]].push_back(
                    Distribution::from_pairs(std::move(entries)));
            }

    return System::unchecked(std::move(states), std::move(labels), std::move(delta));
}

} // namespace fts
