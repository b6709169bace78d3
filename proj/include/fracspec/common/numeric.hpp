#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fracspec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a finite decimal literal ("0.61") into an exact rational.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Rational power with a non-negative integer exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Pairwise (cascade) summation. The result depends only on the order of
/// `values`, never on how work was split across threads.
double pairwise_sum(std::span<const double> values);

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

/// Surface area of the unit sphere S^{n-1} in R^n.
double unit_sphere_area(int n);

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace fracspec
