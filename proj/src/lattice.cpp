#include "reid/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "reid/error.hpp"

namespace reid {

namespace {

bool lattice_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.ids() < b.ids();
}

struct Entry {
  ElemSet members;
  std::vector<ElemId> gens;
};

bool search_generators(const Subgroup& target, const Subgroup& current, std::size_t depth_left,
                       std::vector<std::unordered_set<ElemSet, ElemSetHash>>& dead,
                       std::vector<ElemId>& stack) {
  if (current.order() == target.order()) return true;
  if (depth_left == 0) return false;
  if (dead[depth_left].count(current.members())) return false;
  const GroupPtr& g = target.parent();
  std::unordered_set<ElemSet, ElemSetHash> tried;
  for (ElemId x : target.ids()) {
    if (current.contains(x)) continue;
    stack.push_back(x);
    Subgroup next = generated_subgroup(g, stack);
    if (tried.insert(next.members()).second &&
        search_generators(target, next, depth_left - 1, dead, stack))
      return true;
    stack.pop_back();
  }
  dead[depth_left].insert(current.members());
  return false;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g, const LatticeOptions& options) {
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> known;
  std::vector<Entry> entries;
  auto budget = [&] {
    if (entries.size() > options.max_subgroups)
      throw Error(ErrorKind::BudgetExceeded,
                  "more than " + std::to_string(options.max_subgroups) + " subgroups");
  };

  // Cyclic subgroups seed the search; every subgroup is a join of cyclic ones.
  std::vector<ElemId> cyclic_gens;
  for (ElemId x = 0; x < g->order(); ++x) {
    std::vector<ElemId> gens;
    if (x != FiniteGroup::kIdentity) gens.push_back(x);
    Subgroup c = generated_subgroup(g, gens);
    if (known.emplace(c.members(), entries.size()).second) {
      entries.push_back({c.members(), gens});
      if (x != FiniteGroup::kIdentity) cyclic_gens.push_back(x);
      budget();
    }
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (ElemId x : cyclic_gens) {
      if (entries[i].members.contains(x)) continue;
      std::vector<ElemId> gens = entries[i].gens;
      gens.push_back(x);
      Subgroup s = generated_subgroup(g, gens);
      if (known.emplace(s.members(), entries.size()).second) {
        entries.push_back({s.members(), std::move(gens)});
        budget();
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.emplace_back(g, std::move(e.members));
  std::sort(out.begin(), out.end(), lattice_less);
  return out;
}

std::vector<Subgroup> subgroups_of_index(const GroupPtr& g, std::size_t n,
                                         const LatticeOptions& options) {
  if (n == 0 || g->order() % n != 0) return {};
  if (n == 1) return {whole_group(g)};
  std::vector<Subgroup> out;
  for (Subgroup& s : all_subgroups(g, options))
    if (s.order() * n == g->order()) out.push_back(std::move(s));
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const LatticeOptions& options) {
  std::unordered_set<ElemSet, ElemSetHash> known;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) {
    if (known.insert(s.members()).second) {
      found.push_back(std::move(s));
      if (found.size() > options.max_subgroups)
        throw Error(ErrorKind::BudgetExceeded, "too many normal subgroups");
    }
  };

  add(trivial_subgroup(g));
  std::vector<Subgroup> closures;
  for (const auto& cls : conjugacy_classes(*g).classes) {
    ElemId rep = cls.front();
    Subgroup c = normal_closure(g, std::span<const ElemId>(&rep, 1));
    if (known.count(c.members())) continue;
    closures.push_back(c);
    add(std::move(c));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const Subgroup& c : closures) {
      if (c.members().is_subset_of(found[i].members())) continue;
      add(join(found[i], c));
    }
  std::sort(found.begin(), found.end(), lattice_less);
  return found;
}

std::vector<ElemId> minimal_generating_set(const Subgroup& h) {
  if (h.is_trivial()) return {};
  const GroupPtr& g = h.parent();
  for (std::size_t k = 1;; ++k) {
    std::vector<std::unordered_set<ElemSet, ElemSetHash>> dead(k + 1);
    std::vector<ElemId> stack;
    if (search_generators(h, trivial_subgroup(g), k, dead, stack)) return stack;
  }
}

std::size_t min_generators(const Subgroup& h) { return minimal_generating_set(h).size(); }

std::size_t rank(const GroupPtr& g, const LatticeOptions& options) {
  if (g->order() > options.rank_order_cap)
    throw Error(ErrorKind::BudgetExceeded, "rank sweep limited to groups of order <= " +
                                               std::to_string(options.rank_order_cap));
  std::size_t r = 0;
  for (const Subgroup& s : all_subgroups(g, options)) r = std::max(r, min_generators(s));
  return r;
}

Subgroup characteristic_core(const Subgroup& h, const LatticeOptions& options) {
  const GroupPtr& g = h.parent();
  if (h.is_whole()) return h;
  Subgroup core = whole_group(g);
  for (const Subgroup& s : subgroups_of_index(g, h.index(), options)) core = intersect(core, s);
  return core;
}

Subgroup soluble_radical(const GroupPtr& g, const LatticeOptions& options) {
  Subgroup radical = trivial_subgroup(g);
  for (const Subgroup& n : normal_subgroups(g, options))
    if (derived_series(n.as_group()).soluble) radical = join(radical, n);
  return radical;
}

}  // namespace reid
