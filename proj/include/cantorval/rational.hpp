#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "cantorval/errors.hpp"

namespace cantorval {

using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

// Builds num/den in lowest terms with a positive denominator.  The two-argument
// cpp_rational constructor rejects negative denominators, so normalize signs
// before constructing.
inline Ratio make_ratio(BigInt num, BigInt den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Ratio(num, den);
}

inline BigInt num(const Ratio& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Ratio& r) { return boost::multiprecision::denominator(r); }

// Canonical machine rendering: always "num/den", reduced, denominator positive.
// Integers render with an explicit "/1" so the format stays regular.
inline std::string ratio_str(const Ratio& r) {
    return num(r).str() + "/" + den(r).str();
}

// Parses "a/b" or a bare integer "a".  Returns nullopt on malformed input or a
// zero denominator; never throws.
inline std::optional<Ratio> try_parse_ratio(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return Ratio(BigInt(std::string(text)));
        }
        const auto num_part = text.substr(0, slash);
        const auto den_part = text.substr(slash + 1);
        if (!is_int(num_part) || !is_int(den_part)) return std::nullopt;
        BigInt d{std::string(den_part)};
        if (d == 0) return std::nullopt;
        return make_ratio(BigInt(std::string(num_part)), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Ratio qpow(const Ratio& q, unsigned e) {
    Ratio result(1);
    Ratio base = q;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

inline BigInt ipow(BigInt base, unsigned e) {
    BigInt result(1);
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

// Largest integer <= r.
inline BigInt floor_ratio(const Ratio& r) {
    BigInt n = num(r), d = den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline double to_double(const Ratio& r) { return r.template convert_to<double>(); }

// Fixed two-decimal rendering via integer math, round half away from zero.
// Used for SVG coordinates so output bytes never depend on float formatting.
inline std::string fixed2(const Ratio& r) {
    BigInt scaled_num = num(r) * 200 + (num(r) < 0 ? -den(r) : den(r));
    BigInt hundredths = scaled_num / (2 * den(r));
    bool negative = hundredths < 0;
    if (negative) hundredths = -hundredths;
    BigInt whole = hundredths / 100;
    BigInt frac = hundredths % 100;
    std::string f = frac.str();
    if (f.size() < 2) f.insert(f.begin(), '0');
    return (negative ? "-" : "") + whole.str() + "." + f;
}

} // namespace cantorval
