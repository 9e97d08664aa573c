#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qpb/error.hpp"

namespace qpb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Build p/q, normalizing the sign into the numerator.
/// (The underlying two-argument constructor rejects negative denominators.)
Rat make_rat(Int num, Int den);

/// Parse "p", "-p", or "p/q" (optional surrounding whitespace).
Rat parse_rat(const std::string& text);

/// Render canonically: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
std::string format_rat(const Rat& r);

/// Nearest rational with denominator <= max_den such that |r - x| <= tol,
/// found by walking the continued-fraction expansion of x.
/// Throws NumericError if no convergent within the bounds is close enough.
Rat snap_rat(double x, double tol, const Int& max_den);

/// Exact value of a finite double (every finite double is a dyadic rational).
Rat rat_from_double(double x);

double rat_to_double(const Rat& r);

} // namespace qpb
