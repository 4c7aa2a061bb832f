#include "fts/metric.hpp"

namespace fts {

StateMetric StateMetric::discrete(std::size_t n) {
    StateMetric d(n);
    for (auto& v : d.upper_) v = Degree::one();
    return d;
}

bool pointwise_leq(const StateMetric& a, const StateMetric& b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) > b(i, j)) return false;
    return true;
}

StateMetric pointwise_max(const StateMetric& a, const StateMetric& b) {
    const std::size_t n = a.size();
    StateMetric out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.set(i, j, max(a(i, j), b(i, j)));
    return out;
}

Validated<StateMetric> validate_metric(const std::vector<std::vector<Degree>>& matrix,
                                       const std::vector<std::string>& state_names) {
    Validated<StateMetric> out;
    const std::size_t n = state_names.size();
    if (matrix.size() != n) {
        out.errors.push_back({"matrix has " + std::to_string(matrix.size()) +
                              " rows for " + std::to_string(n) + " states"});
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (matrix[i].size() != n) {
            out.errors.push_back({"row " + state_names[i] + " has " +
                                  std::to_string(matrix[i].size()) + " columns"});
            return out;
        }

    for (std::size_t i = 0; i < n; ++i)
        if (!matrix[i][i].is_zero()) {
            out.errors.push_back({"P1 violated: d(" + state_names[i] + ", " +
                                  state_names[i] + ") = " + matrix[i][i].str()});
            return out;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i]) {
                out.errors.push_back({"P2 violated: d(" + state_names[i] + ", " +
                                      state_names[j] + ") = " + matrix[i][j].str() +
                                      " but d(" + state_names[j] + ", " + state_names[i] +
                                      ") = " + matrix[j][i].str()});
                return out;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (matrix[i][j] > max(matrix[i][k], matrix[k][j])) {
                    out.errors.push_back({"P3 violated at (" + state_names[i] + ", " +
                                          state_names[k] + ", " + state_names[j] + "): d(" +
                                          state_names[i] + ", " + state_names[j] + ") = " +
                                          matrix[i][j].str() + " > max(" +
                                          matrix[i][k].str() + ", " + matrix[k][j].str() +
                                          ")"});
                    return out;
                }

    StateMetric d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d.set(i, j, matrix[i][j]);
    out.value = std::move(d);
    return out;
}

} // namespace fts
