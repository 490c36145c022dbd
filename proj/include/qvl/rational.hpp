// Exact arithmetic aliases and helpers used throughout the library.
// All integers are arbitrary precision; rationals are kept in canonical
// (reduced, positive denominator) form by cpp_rational itself.
#ifndef QVL_RATIONAL_HPP
#define QVL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qvl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return Int(numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(denominator(r)); }

// "p/q" for non-integers, plain "p" otherwise.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q", "-p/q". Throws input_error on anything else.
Rat parse_rational(const std::string& s);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

} // namespace qvl

#endif
