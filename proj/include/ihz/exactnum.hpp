#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ihz/error.hpp"

namespace ihz {

// Arbitrary-precision integers and rationals. Rat values are always kept
// normalized: positive denominator, gcd(|num|, den) = 1, zero as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Nonnegative gcd; gcd(0,0) = 0.
Int gcd(const Int& a, const Int& b);

// Nonnegative lcm; lcm(0,x) = 0.
Int lcm(const Int& a, const Int& b);

// Build a normalized rational. Throws DomainError when den = 0.
Rat make_rat(const Int& num, const Int& den);

Int numer(const Rat& q);
Int denom(const Rat& q);

enum class RatOp { Add, Sub, Mul, Div };

// Exact field arithmetic; Div throws DomainError when b = 0.
Rat rat_arith(const Rat& a, const Rat& b, RatOp op);

// Renders "p/q", omitting "/q" when q = 1.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

// Parses an optional-sign decimal integer. Throws ParseError.
Int parse_int(std::string_view text);

// Parses "p" or "p/q". Throws ParseError / DomainError (q = 0).
Rat parse_rat(std::string_view text);

// Multiplies out denominators: returns (w, d) with d > 0 and w an integer
// vector proportional to v. d starts as the lcm of the denominators of v;
// the entries v_i * d are then made jointly coprime by dividing out their
// gcd g, and d is reduced by gcd(d, g). Whenever g divides d (in
// particular whenever some entry of v is 1, as in canonical basis rows),
// w_i / d = v_i exactly. A zero vector maps to (0,...,0 , 1).
std::pair<std::vector<Int>, Int> clear_denominators(const std::vector<Rat>& v);

} // namespace ihz
