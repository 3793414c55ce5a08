#include "reid/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "reid/error.hpp"

namespace reid {

namespace {

constexpr std::size_t kTableLimit = 2048;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // root is always the least id
  }

 private:
  std::vector<std::uint32_t> parent_;
};

Subgroup closure_of(const GroupPtr& g, ElemSet members, std::vector<ElemId> frontier,
                    std::span<const ElemId> gens) {
  // Right-multiplying by generators from every member reaches the whole
  // generated subgroup since the group is finite.
  while (!frontier.empty()) {
    std::vector<ElemId> next;
    for (ElemId a : frontier)
      for (ElemId s : gens) {
        ElemId b = g->mul(a, s);
        if (!members.contains(b)) {
          members.insert(b);
          next.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  return Subgroup(g, std::move(members));
}

}  // namespace

GroupPtr FiniteGroup::generate(std::size_t degree, std::vector<Perm> generators,
                               const GroupOptions& options) {
  if (degree == 0) throw Error(ErrorKind::DegreeMismatch, "degree must be at least 1");
  for (const Perm& s : generators)
    if (s.degree() != degree) throw Error(ErrorKind::DegreeMismatch, "generator has degree " +
                                              std::to_string(s.degree()) + ", expected " +
                                              std::to_string(degree));

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& s : generators) {
      Perm next = elements[head] * s;
      if (seen.insert(next).second) {
        if (elements.size() >= options.closure_cap)
          throw Error(ErrorKind::ClosureCapExceeded,
                      "closure exceeds cap of " + std::to_string(options.closure_cap));
        elements.push_back(std::move(next));
      }
    }
  }
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->index(std::move(elements), std::move(generators));
  return group;
}

GroupPtr FiniteGroup::from_elements(std::size_t degree, std::vector<Perm> elements,
                                    std::vector<Perm> generators) {
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->index(std::move(elements), std::move(generators));
  return group;
}

void FiniteGroup::index(std::vector<Perm> elements, std::vector<Perm> generators) {
  std::sort(elements.begin(), elements.end());
  elements_ = std::move(elements);
  generators_ = std::move(generators);

  const std::size_t n = elements_.size();
  inverse_.resize(n);
  for (ElemId i = 0; i < n; ++i) inverse_[i] = id_of(elements_[i].inverse());
  generator_ids_.clear();
  for (const Perm& s : generators_) generator_ids_.push_back(id_of(s));

  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b) table_[a * n + b] = id_of(elements_[a] * elements_[b]);
  }
}

std::optional<ElemId> FiniteGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<ElemId>(it - elements_.begin());
}

ElemId FiniteGroup::id_of(const Perm& p) const {
  auto id = find(p);
  if (!id) throw Error(ErrorKind::InvalidPermutation, p.to_cycles() + " is not a group element");
  return *id;
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return id_of(elements_[a] * elements_[b]);
}

ElemId FiniteGroup::commutator(ElemId a, ElemId b) const {
  return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
}

ElemId FiniteGroup::pow(ElemId a, std::int64_t k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  ElemId result = kIdentity;
  ElemId base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(ElemId a) const {
  std::size_t k = 1;
  ElemId x = a;
  while (x != kIdentity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (ElemId a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generator_ids_.size(); ++i)
    for (std::size_t j = i + 1; j < generator_ids_.size(); ++j)
      if (mul(generator_ids_[i], generator_ids_[j]) != mul(generator_ids_[j], generator_ids_[i]))
        return false;
  return true;
}

std::uint64_t FiniteGroup::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ull ^ degree_;
  for (const Perm& p : elements_)
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
  return h;
}

Partition orbit_partition(std::size_t n, std::span<const std::vector<ElemId>> moves) {
  UnionFind uf(n);
  for (const auto& move : moves)
    for (std::uint32_t i = 0; i < n; ++i) uf.unite(i, move[i]);

  Partition part;
  part.class_of.assign(n, 0);
  std::vector<std::int64_t> root_class(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = uf.find(i);
    if (root_class[r] < 0) {
      root_class[r] = static_cast<std::int64_t>(part.classes.size());
      part.classes.emplace_back();
    }
    part.class_of[i] = static_cast<std::uint32_t>(root_class[r]);
    part.classes[part.class_of[i]].push_back(i);
  }
  return part;
}

Subgroup::Subgroup(GroupPtr parent, ElemSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  order_ = members_.count();
  normal_ = true;
  members_.for_each([&](ElemId h) {
    if (!normal_) return;
    for (ElemId s : parent_->generator_ids())
      if (!members_.contains(parent_->conj(s, h))) {
        normal_ = false;
        return;
      }
  });
}

std::size_t Subgroup::index() const noexcept { return parent_->order() / order_; }

bool Subgroup::is_whole() const { return order_ == parent_->order(); }

GroupPtr Subgroup::as_group() const {
  std::vector<Perm> elements;
  elements.reserve(order_);
  members_.for_each([&](ElemId h) { elements.push_back(parent_->element(h)); });

  // Greedy generating set: add members not yet covered, in id order.
  std::vector<Perm> gens;
  std::vector<ElemId> gen_ids;
  ElemSet covered(parent_->order());
  covered.insert(FiniteGroup::kIdentity);
  members_.for_each([&](ElemId h) {
    if (covered.contains(h)) return;
    gen_ids.push_back(h);
    gens.push_back(parent_->element(h));
    covered = generated_subgroup(parent_, gen_ids).members();
  });
  return FiniteGroup::from_elements(parent_->degree(), std::move(elements), std::move(gens));
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const ElemId> generators) {
  ElemSet members(g->order());
  members.insert(FiniteGroup::kIdentity);
  return closure_of(g, std::move(members), {FiniteGroup::kIdentity}, generators);
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  ElemSet members(g->order());
  members.insert(FiniteGroup::kIdentity);
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const GroupPtr& g) {
  ElemSet members(g->order());
  for (ElemId i = 0; i < g->order(); ++i) members.insert(i);
  return Subgroup(g, std::move(members));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  const GroupPtr& g = a.parent();
  std::vector<ElemId> gens = a.ids();
  for (ElemId x : b.ids())
    if (!a.contains(x)) gens.push_back(x);
  ElemSet members = a.members();
  members |= b.members();
  return closure_of(g, members, members.ids(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  ElemSet members = a.members();
  members &= b.members();
  return Subgroup(a.parent(), std::move(members));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const ElemId> seeds) {
  std::vector<ElemId> conjugates;
  ElemSet seen(g->order());
  std::deque<ElemId> queue(seeds.begin(), seeds.end());
  for (ElemId s : seeds) seen.insert(s);
  while (!queue.empty()) {
    ElemId h = queue.front();
    queue.pop_front();
    conjugates.push_back(h);
    for (ElemId s : g->generator_ids()) {
      ElemId c = g->conj(s, h);
      if (!seen.contains(c)) {
        seen.insert(c);
        queue.push_back(c);
      }
    }
  }
  return generated_subgroup(g, conjugates);
}

Subgroup commutator_subgroup(const Subgroup& s) {
  const GroupPtr& g = s.parent();
  std::vector<ElemId> ids = s.ids();
  ElemSet comms(g->order());
  for (ElemId a : ids)
    for (ElemId b : ids) comms.insert(g->commutator(a, b));
  std::vector<ElemId> gens = comms.ids();
  return generated_subgroup(g, gens);
}

Subgroup centralizer(const GroupPtr& g, ElemId x) {
  ElemSet members(g->order());
  for (ElemId y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) members.insert(y);
  return Subgroup(g, std::move(members));
}

Subgroup center(const GroupPtr& g) {
  ElemSet members(g->order());
  for (ElemId y = 0; y < g->order(); ++y) {
    bool central = true;
    for (ElemId s : g->generator_ids())
      if (g->mul(s, y) != g->mul(y, s)) {
        central = false;
        break;
      }
    if (central) members.insert(y);
  }
  return Subgroup(g, std::move(members));
}

Partition conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<ElemId>> moves;
  for (ElemId s : g.generator_ids()) {
    std::vector<ElemId> move(g.order());
    for (ElemId h = 0; h < g.order(); ++h) move[h] = g.conj(s, h);
    moves.push_back(std::move(move));
  }
  return orbit_partition(g.order(), moves);
}

QuotientGroup quotient(const Subgroup& normal) {
  if (!normal.is_normal()) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const GroupPtr& g = normal.parent();
  const std::size_t n = g->order();
  std::vector<ElemId> kernel_ids = normal.ids();

  QuotientGroup q{g, normal, {}, std::vector<std::uint32_t>(n, UINT32_MAX), nullptr, {}};
  for (ElemId a = 0; a < n; ++a) {
    if (q.coset_of[a] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(q.coset_reps.size());
    q.coset_reps.push_back(a);
    for (ElemId k : kernel_ids) q.coset_of[g->mul(a, k)] = c;
  }

  const std::size_t m = q.coset_reps.size();
  auto action = [&](ElemId x) {
    std::vector<Point> images(m);
    for (std::size_t c = 0; c < m; ++c) images[c] = q.coset_of[g->mul(x, q.coset_reps[c])];
    return Perm(std::move(images));
  };

  std::vector<Perm> gens;
  for (ElemId s : g->generator_ids()) gens.push_back(action(s));
  std::vector<Perm> images;
  images.reserve(m);
  for (ElemId rep : q.coset_reps) images.push_back(action(rep));
  q.group = FiniteGroup::from_elements(m, images, std::move(gens));

  q.projection.resize(n);
  std::vector<ElemId> rep_image(m);
  for (std::size_t c = 0; c < m; ++c) rep_image[c] = q.group->id_of(images[c]);
  for (ElemId a = 0; a < n; ++a) q.projection[a] = rep_image[q.coset_of[a]];
  return q;
}

DerivedSeries derived_series(const GroupPtr& g) {
  DerivedSeries series;
  series.terms.push_back(whole_group(g));
  for (;;) {
    const Subgroup& last = series.terms.back();
    if (last.is_trivial()) {
      series.soluble = true;
      series.derived_length = series.terms.size() - 1;
      return series;
    }
    Subgroup next = commutator_subgroup(last);
    if (next.order() == last.order()) {
      series.soluble = false;
      return series;
    }
    series.terms.push_back(std::move(next));
  }
}

}  // namespace reid
