#include "fts/degree.hpp"

#include "fts/types.hpp"

#include <cctype>

namespace fts {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Parses a digit run into an int64, refusing anything that would overflow.
std::optional<std::int64_t> parse_digits(std::string_view s) {
    if (!all_digits(s) || s.size() > 18) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

constexpr std::int64_t pow10(std::size_t k) {
    std::int64_t v = 1;
    while (k--) v *= 10;
    return v;
}

} // namespace

Degree Degree::ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0 || num > den)
        throw Error("degree " + std::to_string(num) + "/" + std::to_string(den) +
                    " outside [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    return Degree(num / g, den / g, unchecked_tag{});
}

std::optional<Degree> Degree::parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_digits(text.substr(0, slash));
        const auto den = parse_digits(text.substr(slash + 1));
        if (!num || !den || *den == 0 || *num > *den) return std::nullopt;
        return ratio(*num, *den);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
        if (frac_part.empty()) return std::nullopt;
    }
    const auto whole = parse_digits(int_part);
    if (!whole || *whole > 1) return std::nullopt;
    if (frac_part.empty()) return Degree::ratio(*whole, 1);

    const auto frac = parse_digits(frac_part);
    if (!frac) return std::nullopt;
    const std::int64_t den = pow10(frac_part.size());
    const std::int64_t num = *whole * den + *frac;
    if (num > den) return std::nullopt;
    return ratio(num, den);
}

std::string Degree::str() const {
    if (den_ == 1) return num_ == 0 ? "0" : "1";

    // Terminating decimal iff the reduced denominator is 2^a * 5^b.
    std::int64_t rest = den_;
    while (rest % 2 == 0) rest /= 2;
    while (rest % 5 == 0) rest /= 5;
    if (rest != 1)
        return std::to_string(num_) + "/" + std::to_string(den_);

    // Long division; terminates because den_ | 10^k for some k.
    std::string out = "0.";
    __int128 r = num_;
    while (r != 0) {
        r *= 10;
        out += static_cast<char>('0' + static_cast<int>(r / den_));
        r %= den_;
    }
    return out;
}

} // namespace fts
