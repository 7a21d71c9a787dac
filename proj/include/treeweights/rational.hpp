#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace treeweights {

// Exact arithmetic everywhere: the classification results hinge on exact
// equality tests, which floats cannot decide.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Mathematical/contract violations (bad k, unknown label, infeasible
// coordinates, ...). The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input (bad fraction strings, broken JSON, missing files).
// The CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p", "-p/q", or a decimal string like "3.25" (converted exactly,
// never rounded). Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" in lowest
// terms with the sign on the numerator.
std::string format_rational(const Rational& value);

}  // namespace treeweights
