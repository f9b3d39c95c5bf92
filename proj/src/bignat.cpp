#include "igrowth/bignat.hpp"

#include <stdexcept>

namespace igrowth {

BigNat factorial(unsigned n) {
  BigNat result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

bool factorial_exceeds(const BigNat& n, const BigNat& bound) {
  if (bound < 0) return true;
  BigNat product = 1;
  if (product > bound) return true;
  // Each factor at least doubles the product from i = 2 on, so this loop
  // runs O(bit_length(bound)) times regardless of n.
  for (BigNat i = 2; i <= n; ++i) {
    product *= i;
    if (product > bound) return true;
  }
  return false;
}

unsigned long bit_length(const BigNat& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(x) + 1;
}

BigNat parse_bignat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad integer literal: '" + text + "'");
  }
  return BigNat(text);
}

std::string to_decimal(const BigNat& x) { return x.str(); }

}  // namespace igrowth
