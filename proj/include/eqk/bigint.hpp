#pragma once

#include <gmpxx.h>

#include <string>

namespace eqk {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace eqk
