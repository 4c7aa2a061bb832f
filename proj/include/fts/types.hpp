#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fts {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

/// Thrown on domain misuse: infeasible transport pairs, relations that are
/// not equivalences, oracle instances above the size bound.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One validation finding, already formatted with its context
/// (offending transition, field, witness states).
struct Diagnostic {
    std::string message;
};

/// Outcome of a validation step: either a value, or errors. Warnings may
/// accompany a successful value (e.g. duplicate transition alternatives).
template <typename T>
struct Validated {
    std::optional<T> value;
    std::vector<Diagnostic> errors;
    std::vector<Diagnostic> warnings;

    bool ok() const { return value.has_value(); }
    T& operator*() { return *value; }
    const T& operator*() const { return *value; }
};

} // namespace fts
