#include "reid/morphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "reid/error.hpp"
#include "reid/lattice.hpp"

namespace reid {

namespace {

void check_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, std::span<const ElemId> map) {
  if (map.size() != src.order())
    throw Error(ErrorKind::NotAHomomorphism, "map size does not match source order");
  if (map[FiniteGroup::kIdentity] != FiniteGroup::kIdentity)
    throw Error(ErrorKind::NotAHomomorphism, "identity not mapped to identity");
  for (ElemId x = 0; x < src.order(); ++x) {
    if (map[x] >= dst.order()) throw Error(ErrorKind::NotAHomomorphism, "image id out of range");
    for (ElemId y = 0; y < src.order(); ++y)
      if (map[src.mul(x, y)] != dst.mul(map[x], map[y]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "map(xy) != map(x)map(y) at x=" + std::to_string(x) + ", y=" + std::to_string(y));
  }
}

// Labels the Cayley graph from the identity: map(x s) = map(x) image(s).
// A consistent labelling of every edge is exactly a homomorphism.
std::optional<std::vector<ElemId>> extend_on_cayley(const FiniteGroup& g,
                                                    std::span<const ElemId> gens,
                                                    std::span<const ElemId> images) {
  constexpr ElemId kUnset = UINT32_MAX;
  std::vector<ElemId> map(g.order(), kUnset);
  map[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
  std::vector<ElemId> queue{FiniteGroup::kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElemId x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElemId y = g.mul(x, gens[k]);
      ElemId value = g.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = value;
        queue.push_back(y);
      } else if (map[y] != value) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) return std::nullopt;  // gens do not generate
  return map;
}

}  // namespace

GroupMorphism::GroupMorphism(GroupPtr source, GroupPtr target, std::vector<ElemId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  check_homomorphism(*source_, *target_, map_);
}

Automorphism::Automorphism(GroupPtr group, std::vector<ElemId> map)
    : group_(std::move(group)), map_(std::move(map)) {
  check_homomorphism(*group_, *group_, map_);
  finish();
}

Automorphism::Automorphism(Trusted, GroupPtr group, std::vector<ElemId> map)
    : group_(std::move(group)), map_(std::move(map)) {
  finish();
}

void Automorphism::finish() {
  const std::size_t n = map_.size();
  inverse_.assign(n, UINT32_MAX);
  for (ElemId g = 0; g < n; ++g) {
    if (inverse_[map_[g]] != UINT32_MAX) throw Error(ErrorKind::NotBijective, "map is not injective");
    inverse_[map_[g]] = g;
  }
  // Order of phi: lcm of cycle lengths of the element map.
  std::vector<bool> seen(n, false);
  order_ = 1;
  for (ElemId g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::size_t len = 0;
    for (ElemId x = g; !seen[x]; x = map_[x]) {
      seen[x] = true;
      ++len;
    }
    order_ = std::lcm(order_, len);
  }
}

Automorphism Automorphism::identity(const GroupPtr& g) {
  std::vector<ElemId> map(g->order());
  for (ElemId i = 0; i < g->order(); ++i) map[i] = i;
  return Automorphism(Trusted{}, g, std::move(map));
}

Automorphism Automorphism::inner(const GroupPtr& g, ElemId x) {
  std::vector<ElemId> map(g->order());
  for (ElemId z = 0; z < g->order(); ++z) map[z] = g->conj(x, z);
  return Automorphism(Trusted{}, g, std::move(map));
}

Automorphism Automorphism::after(const Automorphism& other) const {
  std::vector<ElemId> map(map_.size());
  for (ElemId g = 0; g < map_.size(); ++g) map[g] = map_[other.map_[g]];
  return Automorphism(Trusted{}, group_, std::move(map));
}

Automorphism Automorphism::inverse() const { return Automorphism(Trusted{}, group_, inverse_); }

Automorphism automorphism_from_images(const GroupPtr& g, std::span<const ElemId> generator_images) {
  auto gens = g->generator_ids();
  if (generator_images.size() != gens.size())
    throw Error(ErrorKind::NotAHomomorphism, "expected " + std::to_string(gens.size()) +
                                                 " generator images, got " +
                                                 std::to_string(generator_images.size()));
  for (ElemId img : generator_images)
    if (img >= g->order()) throw Error(ErrorKind::NotAHomomorphism, "generator image out of range");
  auto map = extend_on_cayley(*g, gens, generator_images);
  if (!map) throw Error(ErrorKind::NotAHomomorphism, "generator images violate a relation");
  return Automorphism(g, std::move(*map));
}

std::optional<Automorphism> try_extend(const GroupPtr& g, std::span<const ElemId> generators,
                                       std::span<const ElemId> images) {
  auto map = extend_on_cayley(*g, generators, images);
  if (!map) return std::nullopt;
  std::vector<bool> hit(g->order(), false);
  for (ElemId y : *map) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  return Automorphism(g, std::move(*map));
}

Automorphism compose_with_inner(const Automorphism& phi, ElemId x) {
  return Automorphism::inner(phi.group(), x).after(phi);
}

bool is_invariant(const Automorphism& phi, const Subgroup& h) {
  bool ok = true;
  h.members().for_each([&](ElemId x) {
    if (!h.contains(phi(x))) ok = false;
  });
  return ok;
}

RestrictedAutomorphism restrict(const Automorphism& phi, const Subgroup& h) {
  if (!is_invariant(phi, h)) throw Error(ErrorKind::NotInvariant, "phi(H) != H");
  GroupPtr sub = h.as_group();
  std::vector<ElemId> embedding = h.ids();
  std::vector<ElemId> local(phi.group()->order(), UINT32_MAX);
  for (ElemId k = 0; k < embedding.size(); ++k) local[embedding[k]] = k;
  std::vector<ElemId> map(embedding.size());
  for (ElemId k = 0; k < embedding.size(); ++k) map[k] = local[phi(embedding[k])];
  return {sub, std::move(embedding), Automorphism(sub, std::move(map))};
}

InducedAutomorphism induce_on_quotient(const Automorphism& phi, const Subgroup& n) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "kernel is not normal");
  if (!is_invariant(phi, n)) throw Error(ErrorKind::NotInvariant, "phi(N) != N");
  QuotientGroup q = quotient(n);
  std::vector<ElemId> map(q.group->order(), UINT32_MAX);
  const GroupPtr& g = phi.group();
  for (ElemId x = 0; x < g->order(); ++x) {
    ElemId from = q.projection[x];
    ElemId to = q.projection[phi(x)];
    if (map[from] == UINT32_MAX)
      map[from] = to;
    else if (map[from] != to)
      throw Error(ErrorKind::NotInvariant, "induced map is not well defined");
  }
  Automorphism induced(q.group, std::move(map));
  return {std::move(q), std::move(induced)};
}

Subgroup fixed_subgroup(const Automorphism& phi) {
  const GroupPtr& g = phi.group();
  ElemSet members(g->order());
  for (ElemId x = 0; x < g->order(); ++x)
    if (phi(x) == x) members.insert(x);
  return Subgroup(g, std::move(members));
}

std::vector<Automorphism> all_automorphisms(const GroupPtr& g,
                                            const AutomorphismSearchOptions& options) {
  std::vector<ElemId> gens = minimal_generating_set(whole_group(g));
  if (gens.empty()) return {Automorphism::identity(g)};

  // Candidate images must have the same element order as the generator.
  std::vector<std::vector<ElemId>> candidates(gens.size());
  std::size_t tuples = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t ord = g->element_order(gens[k]);
    for (ElemId y = 0; y < g->order(); ++y)
      if (g->element_order(y) == ord) candidates[k].push_back(y);
    tuples *= candidates[k].size();
    if (tuples > options.max_candidates)
      throw Error(ErrorKind::BudgetExceeded, "automorphism search space too large");
  }

  std::vector<Automorphism> found;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<ElemId> images(gens.size());
  for (;;) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][pos[k]];
    if (auto a = try_extend(g, gens, images)) found.push_back(std::move(*a));
    std::size_t k = 0;
    while (k < gens.size() && ++pos[k] == candidates[k].size()) pos[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(found.begin(), found.end(), [](const Automorphism& a, const Automorphism& b) {
    return std::lexicographical_compare(a.map().begin(), a.map().end(), b.map().begin(),
                                        b.map().end());
  });
  return found;
}

}  // namespace reid
