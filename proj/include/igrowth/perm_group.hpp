#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "igrowth/bignat.hpp"
#include "igrowth/perm.hpp"

namespace igrowth {

class StabilizerChain;

// Largest group order whose elements are ever materialized as a flat list.
inline constexpr std::uint64_t kElementCap = 100000;

// One direct factor of a group built by direct_product(). offset/degree give
// the factor's block of points inside the product's domain.
struct FactorInfo {
  int offset = 0;
  int degree = 0;
  BigNat order;
  bool known_simple = false;
  bool known_nonabelian = false;
};

// A finite permutation group given by generators. Value type with a shared
// immutable representation; the stabilizer chain and the element list are
// computed once on first use (safe under concurrent first access) and shared
// by all copies.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators, std::string name = "");

  static PermGroup trivial(int degree = 1);
  static PermGroup symmetric(int m);
  static PermGroup alternating(int m);
  static PermGroup cyclic(int m);
  static PermGroup dihedral(int m);  // order 2m, m >= 3

  int degree() const;
  const std::string& name() const;
  const std::vector<Perm>& generators() const;

  const StabilizerChain& chain() const;
  const BigNat& order() const;
  std::uint64_t order_u64() const;  // CapacityError if the order leaves 64 bits
  bool contains(const Perm& p) const;
  bool is_trivial() const;

  // Every element in a deterministic order, cached after the first call.
  // CapacityError if order() > kElementCap.
  const std::vector<Perm>& elements() const;

  // Non-empty exactly when this group came from direct_product().
  const std::vector<FactorInfo>& factors() const;
  bool known_simple() const;
  bool known_nonabelian() const;

  // Same underlying representation, or structurally equal generators. Used
  // for "same ambient group" checks, not for group equality.
  bool same_underlying(const PermGroup& other) const;

  // Deterministic key: degree plus the generator image tables. Two groups
  // with equal fingerprints are literally the same generating data.
  std::string fingerprint() const;

 private:
  struct Rep;
  explicit PermGroup(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<Rep> rep_;

  friend PermGroup direct_product(const PermGroup& a, const PermGroup& b);
};

PermGroup direct_product(const PermGroup& a, const PermGroup& b);

}  // namespace igrowth
