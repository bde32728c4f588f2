#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wsbvp {

/// Arbitrary precision rational with expression templates disabled, so that
/// generic code using `auto` behaves the same for Rational and double.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename T> inline double to_double(const T &v) { return static_cast<double>(v); }
template <> inline double to_double<Rational>(const Rational &v) { return v.convert_to<double>(); }

} // namespace wsbvp
