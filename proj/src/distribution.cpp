#include "fts/distribution.hpp"

#include <algorithm>

namespace fts {

Distribution Distribution::singleton(StateId s) {
    Distribution d;
    d.entries_.emplace_back(s, Degree::one());
    return d;
}

Distribution Distribution::from_pairs(std::vector<Entry> entries) {
    std::erase_if(entries, [](const Entry& e) { return e.second.is_zero(); });
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw Error("distribution lists state " + std::to_string(entries[i].first) +
                        " twice");
    Distribution d;
    d.entries_ = std::move(entries);
    return d;
}

Degree Distribution::at(StateId s) const noexcept {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), s,
        [](const Entry& e, StateId v) { return e.first < v; });
    if (it != entries_.end() && it->first == s) return it->second;
    return Degree::zero();
}

Degree Distribution::height() const noexcept {
    Degree h;
    for (const auto& [s, deg] : entries_) h = max(h, deg);
    return h;
}

Degree Distribution::height_over(std::span<const StateId> states) const noexcept {
    Degree h;
    for (StateId s : states) h = max(h, at(s));
    return h;
}

Distribution scale(Degree c, const Distribution& mu) {
    std::vector<Distribution::Entry> out;
    if (c.is_zero()) return {};
    out.reserve(mu.support_size());
    for (const auto& [s, deg] : mu) out.emplace_back(s, min(c, deg));
    return Distribution::from_pairs(std::move(out));
}

Distribution join(const Distribution& mu, const Distribution& eta) {
    std::vector<Distribution::Entry> out;
    out.reserve(mu.support_size() + eta.support_size());
    auto a = mu.begin(), b = eta.begin();
    while (a != mu.end() && b != eta.end()) {
        if (a->first < b->first) out.push_back(*a++);
        else if (b->first < a->first) out.push_back(*b++);
        else {
            out.emplace_back(a->first, max(a->second, b->second));
            ++a, ++b;
        }
    }
    out.insert(out.end(), a, mu.end());
    out.insert(out.end(), b, eta.end());
    return Distribution::from_pairs(std::move(out));
}

Distribution meet_product(const Distribution& mu, const Distribution& eta,
                          std::size_t right_universe) {
    std::vector<Distribution::Entry> out;
    out.reserve(mu.support_size() * eta.support_size());
    for (const auto& [l, dl] : mu)
        for (const auto& [r, dr] : eta)
            out.emplace_back(static_cast<StateId>(l * right_universe + r), min(dl, dr));
    return Distribution::from_pairs(std::move(out));
}

} // namespace fts
