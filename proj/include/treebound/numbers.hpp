#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace treebound {

// Exact arithmetic types. Every inequality verdict in this library is an
// integer or rational comparison on these; doubles appear only in spectra.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with the denominator always spelled out, even when it is 1.
inline std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

inline std::string decimal_string(double x, int significant_digits = 12) {
    std::ostringstream os;
    os.precision(significant_digits);
    os << x;
    return os.str();
}

inline std::string decimal_string(const Rational& r, int significant_digits = 12) {
    return decimal_string(r.convert_to<double>(), significant_digits);
}

}  // namespace treebound
