#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "neutral/errors.hpp"

namespace neutral {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n" or "n/m" exactly.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational");
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw parse_error("malformed rational '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace neutral
