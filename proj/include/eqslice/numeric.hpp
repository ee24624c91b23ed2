#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eqslice {

// Exact scalar types. No floating point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Floor of the square root of a non-negative integer.
Int isqrt_floor(const Int& n);

/// True iff n = r*r for some integer r >= 0; on success *root = r.
bool is_perfect_square(const Int& n, Int* root = nullptr);

/// Exact floor division (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& x) { return x.str(); }

}  // namespace eqslice
