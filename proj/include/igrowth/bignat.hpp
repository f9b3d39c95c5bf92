#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace igrowth {

// Arbitrary-precision nonnegative integer. Orders, indices and growth values
// are factorial-scale, so every quantity that can leave 64 bits uses this.
using BigNat = boost::multiprecision::cpp_int;

BigNat factorial(unsigned n);

// True iff n! > bound, decided from a partial product. Safe for n far beyond
// anything whose factorial could be materialized.
bool factorial_exceeds(const BigNat& n, const BigNat& bound);

unsigned long bit_length(const BigNat& x);

// Strict decimal parse: digits only, no sign, no surrounding junk.
BigNat parse_bignat(const std::string& text);

std::string to_decimal(const BigNat& x);

}  // namespace igrowth
