#include "igrowth/subgroup_enum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "igrowth/errors.hpp"
#include "igrowth/stabilizer_chain.hpp"

namespace igrowth {

namespace {

// ---------------------------------------------------------------- keys

std::string image_table_key(const Perm& p) {
  std::string row;
  row.reserve(static_cast<std::size_t>(p.degree()) * 3);
  for (int x = 0; x < p.degree(); ++x) {
    row += std::to_string(p[x]);
    row += ',';
  }
  return row;
}

// Canonical key: the sorted element tables. Valid only when the subgroup is
// small enough to enumerate, which holds everywhere a key is compared.
std::string element_key(const PermGroup& h) {
  std::vector<std::string> rows;
  rows.reserve(h.elements().size());
  for (const Perm& p : h.elements()) rows.push_back(image_table_key(p));
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) {
    key += r;
    key += ';';
  }
  return key;
}

std::string sort_key(const Subgroup& s) {
  if (s.order() <= kElementCap) return element_key(s.group());
  std::string key;
  for (const Perm& g : s.generators()) {
    key += image_table_key(g);
    key += ';';
  }
  return key;
}

// ---------------------------------------------------------------- cache

struct CacheKey {
  std::string text;
  bool operator<(const CacheKey& other) const { return text < other.text; }
};

std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const SubgroupList>>& cache_map() {
  static std::map<CacheKey, std::shared_ptr<const SubgroupList>> m;
  return m;
}

CacheKey make_key(const PermGroup& g, const std::string& kind, int bound, const EnumOptions& opt) {
  CacheKey k;
  k.text = g.fingerprint() + '#' + kind + '#' + std::to_string(bound) + '#' +
           std::to_string(static_cast<int>(opt.strategy)) + '#' +
           std::to_string(opt.lattice_order_cap) + '#' + std::to_string(opt.search_index_cap) +
           '#' + std::to_string(static_cast<int>(opt.exec));
  return k;
}

std::shared_ptr<const SubgroupList> cache_get(const CacheKey& k) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache_map().find(k);
  return it == cache_map().end() ? nullptr : it->second;
}

void cache_put(const CacheKey& k, SubgroupList value) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache_map().emplace(k, std::make_shared<const SubgroupList>(std::move(value)));
}

// ------------------------------------------------- lattice by join closure

struct LatticeEntry {
  PermGroup group;
  std::string key;
};

bool covers(const PermGroup& big, const PermGroup& small) {
  for (const Perm& s : small.generators())
    if (!big.contains(s)) return false;
  return true;
}

std::vector<LatticeEntry> cyclic_seeds(const PermGroup& g) {
  std::vector<LatticeEntry> seeds;
  std::unordered_set<std::string> seen;
  for (const Perm& e : g.elements()) {
    PermGroup c = generated_by(g.degree(), {e});
    std::string key = element_key(c);
    if (seen.insert(key).second) seeds.push_back({std::move(c), std::move(key)});
  }
  return seeds;
}

// Join closure starting from the cyclic subgroups. Every subgroup is an
// iterated join of cyclic ones, so closing the seed set under joins with
// seeds yields the full lattice; tests cross-check this independently by
// single-element extension.
std::vector<LatticeEntry> lattice_closure(const PermGroup& g, ExecMode exec) {
  std::vector<LatticeEntry> list = cyclic_seeds(g);
  const std::size_t seed_count = list.size();
  std::unordered_set<std::string> seen;
  for (const auto& e : list) seen.insert(e.key);

  std::vector<std::size_t> frontier(seed_count);
  for (std::size_t i = 0; i < seed_count; ++i) frontier[i] = i;

  const int degree = g.degree();
  while (!frontier.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t f : frontier)
      for (std::size_t s = 0; s < seed_count; ++s) tasks.emplace_back(f, s);

    std::vector<std::size_t> next;
    const std::size_t chunk = 256;
    for (std::size_t start = 0; start < tasks.size(); start += chunk) {
      const std::size_t stop = std::min(tasks.size(), start + chunk);
      std::vector<std::optional<LatticeEntry>> produced(stop - start);
      std::exception_ptr failure;

      auto body = [&](std::size_t i) {
        const auto& [fi, si] = tasks[i];
        const PermGroup& a = list[fi].group;
        const PermGroup& b = list[si].group;
        if (covers(a, b) || covers(b, a)) return;  // join is the larger one
        std::vector<Perm> gens = a.generators();
        gens.insert(gens.end(), b.generators().begin(), b.generators().end());
        PermGroup j = generated_by(degree, gens);
        std::string key = element_key(j);
        produced[i - start] = LatticeEntry{std::move(j), std::move(key)};
      };

      if (exec == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = static_cast<long long>(start); i < static_cast<long long>(stop); ++i) {
          try {
            body(static_cast<std::size_t>(i));
          } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
          }
        }
      } else {
        for (std::size_t i = start; i < stop; ++i) body(i);
      }
      if (failure) std::rethrow_exception(failure);

      for (auto& entry : produced) {
        if (!entry) continue;
        if (!seen.insert(entry->key).second) continue;
        next.push_back(list.size());
        list.push_back(std::move(*entry));
      }
    }
    frontier = std::move(next);
  }
  return list;
}

// ------------------------------------------- transitive coset-action search

bool divides(const BigNat& a, const BigNat& b) { return a != 0 && b % a == 0; }

// The pair (g, t) acting on the disjoint union of g's and t's domains.
Perm pair_perm(const Perm& g, const Perm& t, int dg, int m) {
  std::vector<int> images(static_cast<std::size_t>(dg + m));
  for (int x = 0; x < dg; ++x) images[static_cast<std::size_t>(x)] = g[x];
  for (int y = 0; y < m; ++y) images[static_cast<std::size_t>(dg + y)] = dg + t[y];
  return Perm(std::move(images));
}

std::vector<BigNat> prefix_orders(const PermGroup& g) {
  std::vector<BigNat> result{1};
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    gens.push_back(p);
    result.push_back(StabilizerChain(g.degree(), gens).order());
  }
  return result;
}

bool transitive_on(const std::vector<Perm>& ts, int m) {
  std::vector<char> hit(static_cast<std::size_t>(m), 0);
  std::vector<int> queue{0};
  hit[0] = 1;
  int count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& t : ts) {
      int y = t[queue[head]];
      if (!hit[static_cast<std::size_t>(y)]) {
        hit[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
        ++count;
      }
    }
  }
  return count == m;
}

struct SearchScratch {
  const PermGroup* group = nullptr;
  int m = 0;
  const std::vector<std::vector<Perm>>* cand = nullptr;
  const std::vector<BigNat>* prefix = nullptr;
};

// An assignment of images extends to a homomorphism of the prefix exactly
// when the group generated by the pairs has the prefix's order; it always
// projects onto the prefix, so hitting the order cap is the only failure.
bool prefix_consistent(const SearchScratch& ctx, const std::vector<Perm>& pairs,
                       std::size_t level) {
  StabilizerChain chain(ctx.group->degree() + ctx.m, pairs,
                        ChainOptions{{}, (*ctx.prefix)[level]});
  return !chain.order_capped();
}

void emit_stabilizer(const SearchScratch& ctx, const std::vector<Perm>& pairs,
                     const std::vector<Perm>& images, std::vector<std::vector<Perm>>& out) {
  if (!transitive_on(images, ctx.m)) return;
  const int dg = ctx.group->degree();
  StabilizerChain chain(dg + ctx.m, pairs, ChainOptions{{dg}, {}});
  std::vector<Perm> hgens;
  for (const Perm& s : chain.stabilizer_generators(1)) hgens.push_back(s.restricted(dg));
  out.push_back(generated_by(dg, hgens).generators());
}

void search_dfs(const SearchScratch& ctx, std::size_t level, std::vector<Perm>& pairs,
                std::vector<Perm>& images, std::vector<std::vector<Perm>>& out) {
  const auto& gens = ctx.group->generators();
  if (level == gens.size()) {
    emit_stabilizer(ctx, pairs, images, out);
    return;
  }
  for (const Perm& t : (*ctx.cand)[level]) {
    pairs.push_back(pair_perm(gens[level], t, ctx.group->degree(), ctx.m));
    images.push_back(t);
    if (prefix_consistent(ctx, pairs, level + 1)) search_dfs(ctx, level + 1, pairs, images, out);
    pairs.pop_back();
    images.pop_back();
  }
}

// Generator lists (with duplicates) of the subgroups of index exactly m,
// realized as point stabilizers of transitive actions on m points.
std::vector<std::vector<Perm>> stabilizers_of_index(const PermGroup& g, int m, ExecMode exec) {
  const auto& gens = g.generators();
  const std::size_t r = gens.size();
  std::vector<std::vector<Perm>> out;
  if (r == 0) return out;
  if (!divides(BigNat(m), g.order())) return out;

  const std::vector<Perm> sym_elements = PermGroup::symmetric(m).elements();

  std::vector<BigNat> gen_orders;
  gen_orders.reserve(r);
  for (const Perm& p : gens) gen_orders.push_back(p.order());

  // Conjugating an assignment by a permutation fixing the action's base
  // point rewrites the homomorphism without changing the stabilizer, so the
  // first image only needs one representative per conjugation orbit.
  std::vector<Perm> fixing_zero;
  for (const Perm& t : sym_elements)
    if (t[0] == 0) fixing_zero.push_back(t);

  std::vector<std::vector<Perm>> cand(r);
  {
    std::unordered_set<std::string> marked;
    for (const Perm& t : sym_elements) {
      if (!divides(t.order(), gen_orders[0])) continue;
      if (marked.count(image_table_key(t))) continue;
      cand[0].push_back(t);
      for (const Perm& s : fixing_zero) marked.insert(image_table_key(s * t * s.inverse()));
    }
  }
  for (std::size_t i = 1; i < r; ++i)
    for (const Perm& t : sym_elements)
      if (divides(t.order(), gen_orders[i])) cand[i].push_back(t);

  const std::vector<BigNat> prefix = prefix_orders(g);
  SearchScratch ctx{&g, m, &cand, &prefix};

  if (exec == ExecMode::Serial || r < 2) {
    std::vector<Perm> pairs, images;
    search_dfs(ctx, 0, pairs, images, out);
    return out;
  }

  // Parallel path: fan out over the first two image choices, then run the
  // same depth-first search below each; merging in task order reproduces the
  // serial output exactly.
  const std::size_t n0 = cand[0].size(), n1 = cand[1].size();
  std::vector<std::vector<std::vector<Perm>>> partial(n0 * n1);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long task = 0; task < static_cast<long long>(n0 * n1); ++task) {
    try {
      const std::size_t i0 = static_cast<std::size_t>(task) / n1;
      const std::size_t i1 = static_cast<std::size_t>(task) % n1;
      std::vector<Perm> pairs, images;
      pairs.push_back(pair_perm(gens[0], cand[0][i0], g.degree(), m));
      images.push_back(cand[0][i0]);
      if (!prefix_consistent(ctx, pairs, 1)) continue;
      pairs.push_back(pair_perm(gens[1], cand[1][i1], g.degree(), m));
      images.push_back(cand[1][i1]);
      if (!prefix_consistent(ctx, pairs, 2)) continue;
      search_dfs(ctx, 2, pairs, images, partial[static_cast<std::size_t>(task)]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& chunk : partial)
    for (auto& found : chunk) out.push_back(std::move(found));
  return out;
}

// ------------------------------------------------------------- assembling

std::vector<Subgroup> dedup_subgroups(const PermGroup& g,
                                      const std::vector<std::vector<Perm>>& genlists) {
  std::vector<Subgroup> unique;
  std::unordered_set<std::string> seen_keys;
  for (const auto& gens : genlists) {
    Subgroup s(g, gens);
    if (s.order() <= kElementCap) {
      if (!seen_keys.insert(element_key(s.group())).second) continue;
    } else {
      bool duplicate = false;
      for (const Subgroup& u : unique)
        if (u.order() == s.order() && u.same_subgroup_as(s)) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
    }
    unique.push_back(std::move(s));
  }
  return unique;
}

void sort_items(std::vector<Subgroup>& items) {
  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) order.emplace_back(sort_key(items[i]), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const Subgroup& x = items[a.second];
    const Subgroup& y = items[b.second];
    if (x.index() != y.index()) return x.index() < y.index();
    return a.first < b.first;
  });
  std::vector<Subgroup> sorted;
  sorted.reserve(items.size());
  for (const auto& [key, idx] : order) sorted.push_back(items[idx]);
  items = std::move(sorted);
}

bool within_lattice_cap(const PermGroup& g, const EnumOptions& opt) {
  return g.order() <= opt.lattice_order_cap;
}

}  // namespace

std::string to_string(const CompletenessTag& tag) {
  switch (tag.kind) {
    case CompletenessTag::Kind::FullLattice:
      return "full-lattice";
    case CompletenessTag::Kind::UpToIndex:
      return "up-to-index-" + std::to_string(tag.bound);
    case CompletenessTag::Kind::NormalOnly:
      return "normal-up-to-index-" + std::to_string(tag.bound);
    case CompletenessTag::Kind::MaxNormalOnly:
      return "maximal-normal";
  }
  return "?";
}

SubgroupList all_subgroups(const PermGroup& g, const EnumOptions& opt) {
  if (opt.strategy == EnumStrategy::CosetSearch)
    throw std::invalid_argument("all_subgroups requires the lattice strategy");
  const CacheKey key = make_key(g, "all", 0, opt);
  if (auto hit = cache_get(key)) return *hit;
  if (!within_lattice_cap(g, opt))
    throw CapacityError("group order " + g.order().str() + " exceeds lattice cap " +
                        std::to_string(opt.lattice_order_cap));
  SubgroupList result{g, {CompletenessTag::Kind::FullLattice, 0}, {}};
  for (const LatticeEntry& e : lattice_closure(g, opt.exec))
    result.items.emplace_back(g, e.group.generators());
  sort_items(result.items);
  cache_put(key, result);
  return result;
}

SubgroupList subgroups_up_to_index(const PermGroup& g, int n, const EnumOptions& opt) {
  if (n < 1) throw std::invalid_argument("index bound must be >= 1");
  const CacheKey key = make_key(g, "upto", n, opt);
  if (auto hit = cache_get(key)) return *hit;

  EnumStrategy strategy = opt.strategy;
  if (strategy == EnumStrategy::Auto)
    strategy = within_lattice_cap(g, opt) ? EnumStrategy::Lattice : EnumStrategy::CosetSearch;

  SubgroupList result{g, {CompletenessTag::Kind::UpToIndex, n}, {}};
  if (strategy == EnumStrategy::Lattice) {
    SubgroupList full = all_subgroups(g, opt);
    for (const Subgroup& s : full.items)
      if (s.index() <= n) result.items.push_back(s);
  } else {
    // No index exceeds the group order, so a bound beyond it costs nothing.
    int effective = n;
    if (g.order() < n) effective = static_cast<int>(g.order().convert_to<long long>());
    if (effective > opt.search_index_cap)
      throw CapacityError("index bound " + std::to_string(n) + " exceeds search cap " +
                          std::to_string(opt.search_index_cap));
    std::vector<std::vector<Perm>> found;
    found.push_back(g.generators());
    for (int m = 2; m <= effective; ++m)
      for (auto& gens : stabilizers_of_index(g, m, opt.exec)) found.push_back(std::move(gens));
    result.items = dedup_subgroups(g, found);
  }
  sort_items(result.items);
  cache_put(key, result);
  return result;
}

SubgroupList normal_subgroups_up_to_index(const PermGroup& g, int n, const EnumOptions& opt) {
  SubgroupList base = subgroups_up_to_index(g, n, opt);
  SubgroupList result{g, {CompletenessTag::Kind::NormalOnly, n}, {}};
  for (const Subgroup& s : base.items)
    if (is_normal(s)) result.items.push_back(s);
  return result;
}

SubgroupList maximal_normal_subgroups(const PermGroup& g, const EnumOptions& opt) {
  SubgroupList result{g, {CompletenessTag::Kind::MaxNormalOnly, 0}, {}};
  if (g.is_trivial()) return result;

  if (g.known_simple()) {
    result.items.push_back(Subgroup(g, {}));
    return result;
  }

  const auto& factors = g.factors();
  bool structural = !factors.empty();
  for (const FactorInfo& f : factors)
    structural = structural && f.known_simple && f.known_nonabelian;
  if (structural) {
    // Product of nonabelian simple groups: the maximal normal subgroups are
    // exactly the sub-products omitting one factor.
    std::vector<Subgroup> items;
    bool verified = true;
    for (const FactorInfo& f : factors) {
      std::vector<Perm> kept;
      for (const Perm& p : g.generators()) {
        bool touches = false;
        for (int x = f.offset; x < f.offset + f.degree && !touches; ++x)
          if (p[x] != x) touches = true;
        if (!touches) kept.push_back(p);
      }
      Subgroup s(g, std::move(kept));
      if (s.index() != f.order) {
        verified = false;
        break;
      }
      items.push_back(std::move(s));
    }
    if (verified) {
      result.items = std::move(items);
      sort_items(result.items);
      return result;
    }
  }

  SubgroupList full = all_subgroups(g, opt);
  std::vector<Subgroup> normals;
  for (const Subgroup& s : full.items)
    if (!s.is_whole() && is_normal(s)) normals.push_back(s);
  for (const Subgroup& n : normals) {
    bool maximal = true;
    for (const Subgroup& bigger : normals) {
      if (bigger.order() <= n.order()) continue;
      bool contains_n = true;
      for (const Perm& p : n.generators())
        if (!bigger.contains(p)) {
          contains_n = false;
          break;
        }
      if (contains_n) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.items.push_back(n);
  }
  sort_items(result.items);
  return result;
}

}  // namespace igrowth
