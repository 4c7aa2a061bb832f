#pragma once

// The four-state example system used across the suites: s1, s2, s3 move on
// "a" to distributions over s3/s4, s4 is stuck.

#include "fts/system.hpp"

#include <string>

namespace fig1 {

inline fts::RawSystem raw() {
    fts::RawSystem raw;
    raw.states = {"s1", "s2", "s3", "s4"};
    raw.labels = {"a"};
    raw.transitions = {
        {"s1", "a", {{"s3", "0.9"}, {"s4", "0.8"}}},
        {"s2", "a", {{"s3", "0.6"}, {"s4", "0.9"}}},
        {"s3", "a", {{"s4", "0.9"}}},
    };
    return raw;
}

inline fts::System system() {
    auto checked = fts::System::validate(raw());
    return *checked.value;
}

inline std::string json_text() {
    return R"({
  "states": ["s1", "s2", "s3", "s4"],
  "labels": ["a"],
  "transitions": [
    {"from": "s1", "label": "a", "to": {"s3": "0.9", "s4": "0.8"}},
    {"from": "s2", "label": "a", "to": {"s3": "0.6", "s4": "0.9"}},
    {"from": "s3", "label": "a", "to": {"s4": "0.9"}}
  ]
})";
}

} // namespace fig1
