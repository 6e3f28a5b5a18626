#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ultratree {

// Exact rational scalar. All distances, labels and diameters are Rat;
// comparisons are exact, values are kept in lowest terms.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RatParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lowest-terms "p/q", plain "p" when the denominator is 1.
inline std::string format_rat(const Rat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

// Accepts "p", "p/q" and finite decimals like "1.5"; decimals convert
// exactly. Anything else (including repeating-decimal notation) is
// rejected.
inline Rat parse_rat(std::string_view s) {
    std::string_view in = s;
    bool negative = false;
    if (!in.empty() && (in.front() == '-' || in.front() == '+')) {
        negative = in.front() == '-';
        in.remove_prefix(1);
    }
    if (in.empty()) throw RatParseError("empty rational literal: '" + std::string(s) + "'");

    Rat value;
    if (auto slash = in.find('/'); slash != std::string_view::npos) {
        std::string_view p = in.substr(0, slash);
        std::string_view q = in.substr(slash + 1);
        if (!detail::all_digits(p) || !detail::all_digits(q))
            throw RatParseError("malformed fraction: '" + std::string(s) + "'");
        BigInt den{std::string(q)};
        if (den == 0) throw RatParseError("zero denominator: '" + std::string(s) + "'");
        value = Rat(BigInt{std::string(p)}, den);
    } else if (auto dot = in.find('.'); dot != std::string_view::npos) {
        std::string_view whole = in.substr(0, dot);
        std::string_view frac = in.substr(dot + 1);
        if (!detail::all_digits(whole) || !detail::all_digits(frac))
            throw RatParseError("malformed decimal: '" + std::string(s) + "'");
        BigInt den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        value = Rat(BigInt{std::string(whole)} * den + BigInt{std::string(frac)}, den);
    } else {
        if (!detail::all_digits(in))
            throw RatParseError("malformed rational: '" + std::string(s) + "'");
        value = Rat(BigInt{std::string(in)});
    }
    return negative ? Rat(-value) : value;
}

} // namespace ultratree
