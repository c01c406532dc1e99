#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diskscale {

// Exact rational arithmetic. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we rely on when
// hashing and comparing coordinates.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix, so
// digit runs like ".03125" must be trimmed before conversion.
inline BigInt from_digits(std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return BigInt{std::string(s.substr(i))};
}

} // namespace detail

/// Parses "12", "-3.25", or "p/q" (e.g. "28/19") into an exact rational.
/// Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
        BigInt d = detail::from_digits(den);
        if (d == 0) return fail();
        value = Rational(detail::from_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) return fail();
        if (!ip.empty() && !detail::all_digits(ip)) return fail();
        if (!fp.empty() && !detail::all_digits(fp)) return fail();
        BigInt scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt whole = ip.empty() ? BigInt(0) : detail::from_digits(ip);
        BigInt frac = fp.empty() ? BigInt(0) : detail::from_digits(fp);
        value = Rational(whole * scale + frac, scale);
    } else {
        if (!detail::all_digits(s)) return fail();
        value = Rational(detail::from_digits(s));
    }
    return negative ? Rational(-value) : value;
}

[[nodiscard]] inline BigInt floor_rational(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

[[nodiscard]] inline BigInt ceil_rational(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt quo = n / d;
    if (n > 0 && quo * d != n) ++quo;
    return quo;
}

/// Canonical text form: finite decimal when the denominator is 2^a·5^b
/// ("2.5", "4"), otherwise "p/q" ("28/19"). parse_rational round-trips it.
inline std::string rational_to_string(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;

    BigInt d = den;
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1)
        return (neg ? "-" : "") + num.str() + "/" + den.str();

    unsigned digits = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * (scale / den); // exact: den | scale by construction
    BigInt whole = scaled / scale, frac = scaled % scale;
    std::string out = (neg ? "-" : "") + whole.str();
    if (frac != 0) {
        std::string fs = frac.str();
        fs.insert(fs.begin(), digits - fs.size(), '0');
        while (fs.back() == '0') fs.pop_back();
        out += "." + fs;
    }
    return out;
}

} // namespace diskscale
