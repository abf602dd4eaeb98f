#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <string>

namespace hm {

// All density thresholds ((1/k+gamma)n, the deficiency conditions, the removal-edge
// inequality) are compared in exact rational arithmetic. cpp_int keeps intermediate
// products exact regardless of instance size.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat make_rat(long long num, long long den = 1) { return Rat(BigInt(num), BigInt(den)); }

BigInt floor_rat(const Rat& r);
BigInt ceil_rat(const Rat& r);

// Parses "p/q" or "p" with optional sign; throws ParseError on junk or q == 0.
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& r);

// Exact square root when r is a perfect square of a rational, otherwise nullopt.
// Used to validate the eps parameter, which must be supplied as a perfect square
// so that sqrt(eps) stays rational.
std::optional<Rat> exact_sqrt(const Rat& r);

BigInt pow_int(const BigInt& base, unsigned exp);
BigInt factorial_big(unsigned m);

}  // namespace hm
