#include "igrowth/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "igrowth/errors.hpp"

namespace igrowth {

namespace {

BigNat orbit_product(const std::vector<std::uint64_t>& sizes) {
  BigNat p = 1;
  for (auto s : sizes) p *= s;
  return p;
}

}  // namespace

StabilizerChain::StabilizerChain(int degree, const std::vector<Perm>& generators,
                                 ChainOptions options)
    : degree_(degree), options_(std::move(options)), order_(1) {
  if (degree_ < 1) throw std::invalid_argument("chain degree must be >= 1");
  for (int b : options_.forced_base) {
    if (b < 0 || b >= degree_) throw std::invalid_argument("forced base point out of range");
    for (const auto& lvl : levels_)
      if (lvl.base == b) throw std::invalid_argument("forced base point repeated");
    Level lvl;
    lvl.base = b;
    levels_.push_back(std::move(lvl));
    rebuild_orbit(levels_.size() - 1);
  }

  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree does not match chain degree");
    auto [res, lev] = sift(g, 0);
    if (res.is_identity()) continue;
    add_residue(res, lev);
    if (capped_) return;
  }

  // Bottom-up Schreier verification. A level is cleared only when every one
  // of its Schreier generators sifts to the identity through the levels
  // below; a failure deepens the chain there and restarts from that depth.
  // Levels above a change are rescanned on the way back up, levels below it
  // are untouched by the change, so a full clean sweep certifies the chain.
  if (!levels_.empty()) {
    std::size_t lev = levels_.size() - 1;
    while (true) {
      bool clean = true;
      for (std::size_t oi = 0; oi < levels_[lev].orbit.size() && clean; ++oi) {
        for (std::size_t gi = 0; gi < levels_[lev].gens.size() && clean; ++gi) {
          const Perm& s = levels_[lev].gens[gi];
          const Perm st = s * levels_[lev].transversal[oi];
          int image = st[levels_[lev].base];
          int islot = levels_[lev].slot[static_cast<std::size_t>(image)];
          Perm schreier = levels_[lev].transversal[static_cast<std::size_t>(islot)].inverse() * st;
          auto [res, rlev] = sift(schreier, lev + 1);
          if (!res.is_identity()) {
            add_residue(res, rlev);
            if (capped_) return;
            lev = std::min(rlev, levels_.size() - 1);
            clean = false;
          }
        }
      }
      if (!clean) continue;
      if (lev == 0) break;
      --lev;
    }
  }

  std::vector<std::uint64_t> sizes;
  for (const auto& lvl : levels_) sizes.push_back(lvl.orbit.size());
  order_ = orbit_product(sizes);
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& lvl = levels_[level];
  lvl.orbit.assign(1, lvl.base);
  lvl.slot.assign(static_cast<std::size_t>(degree_), -1);
  lvl.slot[static_cast<std::size_t>(lvl.base)] = 0;
  lvl.transversal.assign(1, Perm(degree_));
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    int point = lvl.orbit[head];
    for (const Perm& g : lvl.gens) {
      int image = g[point];
      if (lvl.slot[static_cast<std::size_t>(image)] != -1) continue;
      lvl.slot[static_cast<std::size_t>(image)] = static_cast<int>(lvl.orbit.size());
      lvl.orbit.push_back(image);
      lvl.transversal.push_back(g * lvl.transversal[head]);
    }
  }
}

void StabilizerChain::add_residue(const Perm& residue, std::size_t level) {
  if (level == levels_.size()) {
    Level lvl;
    lvl.base = residue.smallest_moved();
    levels_.push_back(std::move(lvl));
  }
  // Keep generator sets nested: the residue fixes every base point above
  // `level`, so it belongs to each of those stabilizers too.
  for (std::size_t j = 0; j <= level; ++j) {
    levels_[j].gens.push_back(residue);
    rebuild_orbit(j);
  }
  if (over_cap()) capped_ = true;
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm& p, std::size_t level) const {
  Perm current = p;
  for (std::size_t j = level; j < levels_.size(); ++j) {
    const Level& lvl = levels_[j];
    int image = current[lvl.base];
    int islot = lvl.slot[static_cast<std::size_t>(image)];
    if (islot == -1) return {current, j};
    if (islot != 0) current = lvl.transversal[static_cast<std::size_t>(islot)].inverse() * current;
  }
  return {current, levels_.size()};
}

bool StabilizerChain::over_cap() const {
  if (!options_.order_cap) return false;
  BigNat p = 1;
  for (const auto& lvl : levels_) {
    p *= static_cast<std::uint64_t>(lvl.orbit.size());
    if (p > *options_.order_cap) return true;
  }
  return false;
}

const BigNat& StabilizerChain::order() const {
  if (capped_) throw std::logic_error("order() on a capped chain");
  return order_;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (capped_) throw std::logic_error("contains() on a capped chain");
  if (p.degree() != degree_) return false;
  auto [res, lev] = sift(p, 0);
  (void)lev;
  return res.is_identity();
}

std::vector<Perm> StabilizerChain::stabilizer_generators(std::size_t level) const {
  if (capped_) throw std::logic_error("stabilizer_generators() on a capped chain");
  if (level == 0) {
    if (levels_.empty()) return {};
    return levels_[0].gens;
  }
  if (level > levels_.size()) throw std::out_of_range("stabilizer level out of range");
  if (level == levels_.size()) return {};
  return levels_[level].gens;
}

std::vector<Perm> StabilizerChain::elements(std::uint64_t cap) const {
  if (capped_) throw std::logic_error("elements() on a capped chain");
  if (order_ > cap)
    throw CapacityError("group order " + order_.str() + " exceeds element enumeration cap " +
                        std::to_string(cap));
  std::vector<Perm> result;
  result.reserve(static_cast<std::size_t>(order_));
  // Each element factors uniquely as t_0 * t_1 * ... with t_j from level j's
  // transversal, so walking slots depth first yields a deterministic order.
  auto emit = [&](auto&& self, std::size_t level, const Perm& prefix) -> void {
    if (level == levels_.size()) {
      result.push_back(prefix);
      return;
    }
    for (const Perm& t : levels_[level].transversal) self(self, level + 1, prefix * t);
  };
  emit(emit, 0, Perm(degree_));
  return result;
}

}  // namespace igrowth
