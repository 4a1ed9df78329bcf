#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <set>
#include <string>

namespace motive {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::strong_ordering compare_int(const Int& a, const Int& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int binomial(int n, int k);

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// "3", "-5/2"
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& text);

/// Distinct prime divisors of |n| by trial division; empty for 0, +-1.
std::set<Int> prime_divisors(Int n);

}  // namespace motive
