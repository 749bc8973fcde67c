#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "qsl2/errors.hpp"

namespace qsl2 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p" when the denominator is 1, "p/q" otherwise (q > 0, reduced).
inline std::string rational_to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Parses "p" or "p/q". Throws ParseError on malformed input or q = 0.
inline Rational rational_from_string(std::string_view s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
        Integer num(std::string(s.substr(0, slash)));
        Integer den(std::string(s.substr(slash + 1)));
        if (den == 0) throw ParseError("rational with zero denominator: " + std::string(s));
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + std::string(s));
    }
}

}  // namespace qsl2
