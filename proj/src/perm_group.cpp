#include "igrowth/perm_group.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "igrowth/errors.hpp"
#include "igrowth/stabilizer_chain.hpp"

namespace igrowth {

struct PermGroup::Rep {
  int degree = 1;
  std::vector<Perm> gens;
  std::string name;
  std::vector<FactorInfo> factors;
  bool known_simple = false;
  bool known_nonabelian = false;

  std::once_flag chain_once;
  std::unique_ptr<StabilizerChain> chain;

  std::once_flag elements_once;
  std::vector<Perm> element_list;
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::string name)
    : rep_(std::make_shared<Rep>()) {
  if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
  rep_->degree = degree;
  rep_->gens = std::move(generators);
  rep_->name = std::move(name);
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}, "1"); }

PermGroup PermGroup::symmetric(int m) {
  if (m < 1) throw std::invalid_argument("symmetric(m) needs m >= 1");
  std::vector<Perm> gens;
  if (m >= 2) gens.push_back(perm_from_cycles("(1 2)", m));
  if (m >= 3) {
    std::vector<int> cycle(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) cycle[static_cast<std::size_t>(x)] = (x + 1) % m;
    gens.push_back(Perm(std::move(cycle)));
  }
  PermGroup g(m, std::move(gens), "S" + std::to_string(m));
  g.rep_->known_simple = (m == 2);
  g.rep_->known_nonabelian = (m >= 3);
  return g;
}

PermGroup PermGroup::alternating(int m) {
  if (m < 1) throw std::invalid_argument("alternating(m) needs m >= 1");
  std::vector<Perm> gens;
  if (m >= 3) gens.push_back(perm_from_cycles("(1 2 3)", m));
  if (m >= 4) {
    // A full cycle for odd m, an (m-1)-cycle avoiding the first point for
    // even m; both are even permutations and complete a generating pair.
    std::vector<int> images(static_cast<std::size_t>(m));
    std::iota(images.begin(), images.end(), 0);
    if (m % 2 == 1) {
      for (int x = 0; x < m; ++x) images[static_cast<std::size_t>(x)] = (x + 1) % m;
    } else {
      for (int x = 1; x < m; ++x) images[static_cast<std::size_t>(x)] = 1 + (x % (m - 1));
    }
    gens.push_back(Perm(std::move(images)));
  }
  PermGroup g(m, std::move(gens), "A" + std::to_string(m));
  g.rep_->known_simple = (m == 3 || m >= 5);
  g.rep_->known_nonabelian = (m >= 4);
  return g;
}

PermGroup PermGroup::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic(m) needs m >= 1");
  if (m == 1) return PermGroup(1, {}, "C1");
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) images[static_cast<std::size_t>(x)] = (x + 1) % m;
  PermGroup g(m, {Perm(std::move(images))}, "C" + std::to_string(m));
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  g.rep_->known_simple = is_prime(m);
  return g;
}

PermGroup PermGroup::dihedral(int m) {
  if (m < 3) throw std::invalid_argument("dihedral(m) needs m >= 3");
  std::vector<int> rotation(static_cast<std::size_t>(m));
  std::vector<int> reflection(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    rotation[static_cast<std::size_t>(x)] = (x + 1) % m;
    reflection[static_cast<std::size_t>(x)] = m - 1 - x;
  }
  PermGroup g(m, {Perm(std::move(rotation)), Perm(std::move(reflection))},
              "D" + std::to_string(2 * m));
  g.rep_->known_nonabelian = true;
  return g;
}

int PermGroup::degree() const { return rep_->degree; }
const std::string& PermGroup::name() const { return rep_->name; }
const std::vector<Perm>& PermGroup::generators() const { return rep_->gens; }

const StabilizerChain& PermGroup::chain() const {
  std::call_once(rep_->chain_once, [this] {
    rep_->chain = std::make_unique<StabilizerChain>(rep_->degree, rep_->gens);
  });
  return *rep_->chain;
}

const BigNat& PermGroup::order() const { return chain().order(); }

std::uint64_t PermGroup::order_u64() const {
  const BigNat& n = order();
  if (n > BigNat(UINT64_MAX))
    throw CapacityError("group order " + n.str() + " does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != rep_->degree) return false;
  return chain().contains(p);
}

bool PermGroup::is_trivial() const { return order() == 1; }

const std::vector<Perm>& PermGroup::elements() const {
  if (order() > kElementCap)
    throw CapacityError("group order " + order().str() + " exceeds element cap " +
                        std::to_string(kElementCap));
  std::call_once(rep_->elements_once,
                 [this] { rep_->element_list = chain().elements(kElementCap); });
  return rep_->element_list;
}

const std::vector<FactorInfo>& PermGroup::factors() const { return rep_->factors; }
bool PermGroup::known_simple() const { return rep_->known_simple; }
bool PermGroup::known_nonabelian() const { return rep_->known_nonabelian; }

bool PermGroup::same_underlying(const PermGroup& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->degree == other.rep_->degree && rep_->gens == other.rep_->gens;
}

std::string PermGroup::fingerprint() const {
  std::string key = std::to_string(rep_->degree);
  for (const Perm& g : rep_->gens) {
    key += '|';
    for (int x = 0; x < g.degree(); ++x) {
      key += std::to_string(g[x]);
      key += ',';
    }
  }
  return key;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const Perm& g : a.generators()) gens.push_back(g.extended(degree));
  for (const Perm& g : b.generators()) gens.push_back(g.shifted(a.degree(), degree));

  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();

  PermGroup result(degree, std::move(gens), std::move(name));

  auto splice = [&result](const PermGroup& g, int offset) {
    if (g.factors().empty()) {
      result.rep_->factors.push_back(
          FactorInfo{offset, g.degree(), g.order(), g.known_simple(), g.known_nonabelian()});
    } else {
      for (FactorInfo f : g.factors()) {
        f.offset += offset;
        result.rep_->factors.push_back(std::move(f));
      }
    }
  };
  splice(a, 0);
  splice(b, a.degree());
  return result;
}

}  // namespace igrowth
