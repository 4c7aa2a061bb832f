#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

namespace fts {

/// A membership degree or distance value: an exact rational in [0, 1].
///
/// The whole calculus runs on min/max/comparison plus one complement
/// (1 - x), so denominators never grow past those of the parsed inputs,
/// and exact equality is a sound fixpoint-termination test. Stored in
/// lowest terms; comparisons cross-multiply in 128 bits.
class Degree {
public:
    constexpr Degree() noexcept : num_(0), den_(1) {}

    static constexpr Degree zero() noexcept { return Degree(); }
    static constexpr Degree one() noexcept { return Degree(1, 1, unchecked_tag{}); }

    /// num/den reduced to lowest terms. Throws Error unless 0 <= num/den <= 1.
    static Degree ratio(std::int64_t num, std::int64_t den);

    /// Accepts decimal literals ("0", "1", "0.25", "1.0") and fractions
    /// ("3/4"). Rejects values outside [0, 1], signs, exponents and
    /// decimals of more than 18 fractional digits.
    static std::optional<Degree> parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == den_; }

    /// 1 - value.
    Degree complement() const noexcept {
        return Degree(den_ - num_, den_, unchecked_tag{});
    }

    /// Shortest exact decimal when the value terminates ("0.6", "1"),
    /// otherwise a reduced fraction ("1/3").
    std::string str() const;

    friend bool operator==(const Degree& a, const Degree& b) noexcept = default;

    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const auto lhs = static_cast<__int128>(a.num_) * b.den_;
        const auto rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

private:
    struct unchecked_tag {};
    constexpr Degree(std::int64_t num, std::int64_t den, unchecked_tag) noexcept
        : num_(num), den_(den) {}

    std::int64_t num_; // 0 <= num_ <= den_, gcd(num_, den_) = 1
    std::int64_t den_; // den_ >= 1
};

inline Degree min(Degree a, Degree b) noexcept { return a < b ? a : b; }
inline Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }

} // namespace fts

template <>
struct std::hash<fts::Degree> {
    std::size_t operator()(const fts::Degree& d) const noexcept {
        return std::hash<std::int64_t>{}(d.num()) * 1000003u
             ^ std::hash<std::int64_t>{}(d.den());
    }
};
