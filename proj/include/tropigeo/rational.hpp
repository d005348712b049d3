#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tropigeo {

// Expression templates are disabled so arithmetic yields plain values that
// work with std::min/std::max and structured initialization.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Canonical text form: "7", "-3/2". The denominator is omitted when it is 1.
std::string format_rational(const Rat& value);

// Accepts integers ("7"), fractions ("-3/2") and decimal literals ("0.25",
// "-1.5", ".75"). Every form is read exactly.
Rat parse_rational(std::string_view text);

// Exact decimal expansion rounded (half away from zero) to at most
// `max_fraction_digits` digits, trailing zeros stripped.
std::string decimal_string(const Rat& value, int max_fraction_digits);

}  // namespace tropigeo
