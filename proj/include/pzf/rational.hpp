#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pzf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational; kept in lowest terms with positive
/// denominator by boost. All probabilities stay in this type until a
/// reporting boundary.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string num_str(const Rational& r) { return num(r).str(); }
inline std::string den_str(const Rational& r) { return den(r).str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "num/den" rendering used everywhere exact values are printed.
inline std::string to_string(const Rational& r) {
    return num_str(r) + "/" + den_str(r);
}

}  // namespace pzf
