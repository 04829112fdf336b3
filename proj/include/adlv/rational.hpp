#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adlv {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. All order-theoretic computations in this library
// (partial sums, floors, fractional parts) are done in exact arithmetic;
// doubles appear only when rendering SVG coordinates.
using Rat = boost::multiprecision::cpp_rational;

// Floor toward -infinity.
inline BigInt rat_floor_big(const Rat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);  // canonical: den > 0
    BigInt quo = num / den;                              // truncates toward zero
    if (num < 0 && quo * den != num) --quo;
    return quo;
}

inline Int rat_floor(const Rat& q) { return rat_floor_big(q).convert_to<Int>(); }

// Fractional part {a} = a - floor(a), always in [0,1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor_big(q)); }

inline bool rat_is_integral(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Int rat_to_int(const Rat& q) {
    if (!rat_is_integral(q))
        throw std::invalid_argument("rat_to_int: value is not an integer: " + q.str());
    return boost::multiprecision::numerator(q).convert_to<Int>();
}

// "p/q" with denominator omitted when 1.
std::string rat_str(const Rat& q);

// Accepts "n", "-n", "p/q", "-p/q".
Rat parse_rat(std::string_view s);

// Comma-separated list of the above.
std::vector<Rat> parse_rat_vector(std::string_view s);

std::vector<Int> parse_int_vector(std::string_view s);

}  // namespace adlv
