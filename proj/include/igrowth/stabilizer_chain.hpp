#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "igrowth/bignat.hpp"
#include "igrowth/perm.hpp"

namespace igrowth {

struct ChainOptions {
  // Base points that must come first, in this order (used to read off point
  // stabilizers). Further base points are the smallest moved points.
  std::vector<int> forced_base = {};
  // Abort construction once the group order provably exceeds this bound.
  std::optional<BigNat> order_cap = {};
};

// Deterministic Schreier-Sims stabilizer chain. Base points are the smallest
// moved points subject to the forced prefix, orbits expand in BFS order, so
// two builds from equal generator lists are identical.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Perm>& generators, ChainOptions options = {});

  int degree() const { return degree_; }

  // True iff construction stopped early because the order exceeded the cap.
  // Every other accessor is off limits on a capped chain.
  bool order_capped() const { return capped_; }

  const BigNat& order() const;
  bool contains(const Perm& p) const;

  std::size_t base_size() const { return levels_.size(); }
  int base_point(std::size_t level) const { return levels_[level].base; }

  // Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Perm> stabilizer_generators(std::size_t level) const;

  // Every element, in a deterministic order. CapacityError if order() > cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;         // BFS order; orbit[0] == base
    std::vector<int> slot;          // point -> orbit position, -1 outside
    std::vector<Perm> transversal;  // by orbit position; maps base to point
  };

  // Recomputes the orbit and transversal of one level from its generators.
  void rebuild_orbit(std::size_t level);
  // Appends a residue known not to fix base points above `level`.
  void add_residue(const Perm& residue, std::size_t level);
  // Sifts p through levels [level, end); returns the residue and the level
  // where sifting stopped.
  std::pair<Perm, std::size_t> sift(const Perm& p, std::size_t level) const;
  bool over_cap() const;

  int degree_;
  std::vector<Level> levels_;
  ChainOptions options_;
  bool capped_ = false;
  BigNat order_;
};

}  // namespace igrowth
