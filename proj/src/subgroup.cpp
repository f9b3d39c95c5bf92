#include "igrowth/subgroup.hpp"

#include <stdexcept>
#include <utility>

#include "igrowth/errors.hpp"

namespace igrowth {

PermGroup generated_by(int degree, const std::vector<Perm>& elements, std::string name) {
  std::vector<Perm> gens;
  PermGroup current(degree, {});
  for (const Perm& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
  }
  return PermGroup(degree, std::move(gens), std::move(name));
}

Subgroup::Subgroup(PermGroup ambient, std::vector<Perm> generators)
    : ambient_(std::move(ambient)), group_(ambient_.degree(), std::move(generators)) {
  for (const Perm& g : group_.generators())
    if (!ambient_.contains(g))
      throw std::invalid_argument("subgroup generator outside the ambient group");
  BigNat quotient, remainder;
  boost::multiprecision::divide_qr(ambient_.order(), group_.order(), quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("subgroup order does not divide ambient order");
  index_ = std::move(quotient);
}

Subgroup Subgroup::whole(const PermGroup& g) { return Subgroup(g, g.generators()); }

Subgroup Subgroup::trivial_of(const PermGroup& g) { return Subgroup(g, {}); }

bool Subgroup::same_subgroup_as(const Subgroup& other) const {
  if (!ambient_.same_underlying(other.ambient_))
    throw std::invalid_argument("comparing subgroups of different ambient groups");
  if (order() != other.order()) return false;
  for (const Perm& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

namespace {

void require_same_ambient(const Subgroup& h, const Subgroup& k) {
  if (!h.ambient().same_underlying(k.ambient()))
    throw std::invalid_argument("subgroups live in different ambient groups");
}

}  // namespace

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k);
  if (h.is_whole()) return k;
  if (k.is_whole()) return h;
  if (h.is_trivial()) return h;
  if (k.is_trivial()) return k;
  const Subgroup& small = (h.order() <= k.order()) ? h : k;
  const Subgroup& large = (h.order() <= k.order()) ? k : h;
  std::vector<Perm> common;
  for (const Perm& e : small.group().elements())
    if (large.contains(e)) common.push_back(e);
  PermGroup meet = generated_by(h.ambient().degree(), common);
  return Subgroup(h.ambient(), meet.generators());
}

Subgroup conjugate(const Subgroup& h, const Perm& g) {
  if (!h.ambient().contains(g))
    throw std::invalid_argument("conjugating element outside the ambient group");
  const Perm ginv = g.inverse();
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& s : h.generators()) gens.push_back(g * s * ginv);
  return Subgroup(h.ambient(), std::move(gens));
}

bool is_normal(const Subgroup& h) {
  for (const Perm& a : h.ambient().generators()) {
    const Perm ainv = a.inverse();
    for (const Perm& s : h.generators())
      if (!h.contains(a * s * ainv)) return false;
  }
  return true;
}

Subgroup normal_core(const Subgroup& h) {
  if (h.is_whole() || h.is_trivial()) return h;
  // Orbit of h under conjugation by the ambient generators, then the meet of
  // the whole orbit.
  std::vector<Subgroup> orbit{h};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& a : h.ambient().generators()) {
      Subgroup image = conjugate(orbit[head], a);
      bool fresh = true;
      for (const Subgroup& seen : orbit)
        if (seen.same_subgroup_as(image)) {
          fresh = false;
          break;
        }
      if (fresh) orbit.push_back(std::move(image));
    }
  }
  Subgroup core = h;
  for (std::size_t i = 1; i < orbit.size(); ++i) {
    if (core.is_trivial()) break;
    core = intersect(core, orbit[i]);
  }
  return core;
}

}  // namespace igrowth
