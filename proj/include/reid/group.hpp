#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "reid/elem_set.hpp"
#include "reid/perm.hpp"

namespace reid {

struct GroupOptions {
  std::size_t closure_cap = 20000;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by image array, so ids are
/// deterministic and the identity always has id 0.
class FiniteGroup {
 public:
  static constexpr ElemId kIdentity = 0;

  /// Product closure of `generators`. Throws DegreeMismatch or ClosureCapExceeded.
  static GroupPtr generate(std::size_t degree, std::vector<Perm> generators,
                           const GroupOptions& options = {});

  /// Builds a group from an element list already known to be closed.
  /// `elements` need not be sorted.
  static GroupPtr from_elements(std::size_t degree, std::vector<Perm> elements,
                                std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  std::span<const ElemId> generator_ids() const noexcept { return generator_ids_; }

  const Perm& element(ElemId id) const { return elements_[id]; }
  std::optional<ElemId> find(const Perm& p) const;
  /// Throws Error(InvalidPermutation) when `p` is not in the group.
  ElemId id_of(const Perm& p) const;

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// x g x^-1
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(x, g), inverse_[x]); }
  ElemId commutator(ElemId a, ElemId b) const;
  ElemId pow(ElemId a, std::int64_t k) const;

  std::size_t element_order(ElemId a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  /// Stable fingerprint of the element set (used for seeding samplers).
  std::uint64_t canonical_hash() const;

 private:
  FiniteGroup() = default;
  void index(std::vector<Perm> elements, std::vector<Perm> generators);

  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<ElemId> generator_ids_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> table_;  // Cayley table, only for small groups
};

inline GroupPtr generate_group(std::size_t degree, std::vector<Perm> generators,
                               const GroupOptions& options = {}) {
  return FiniteGroup::generate(degree, std::move(generators), options);
}

/// A partition of element ids. Blocks are sorted and ordered by their least id.
struct Partition {
  std::vector<std::vector<ElemId>> classes;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Connected components of the graph on {0..n-1} with edges i -- move(i).
Partition orbit_partition(std::size_t n, std::span<const std::vector<ElemId>> moves);

class Subgroup {
 public:
  /// `members` must already be closed; no check beyond normality bookkeeping.
  Subgroup(GroupPtr parent, ElemSet members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const ElemSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t index() const noexcept;
  bool contains(ElemId g) const { return members_.contains(g); }
  bool is_normal() const noexcept { return normal_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const;
  std::vector<ElemId> ids() const { return members_.ids(); }

  /// The subgroup as a FiniteGroup of its own. Its element k is ids()[k].
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElemSet members_;
  std::size_t order_ = 0;
  bool normal_ = false;
};

Subgroup generated_subgroup(const GroupPtr& g, std::span<const ElemId> generators);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const GroupPtr& g, std::span<const ElemId> seeds);
Subgroup commutator_subgroup(const Subgroup& s);
Subgroup centralizer(const GroupPtr& g, ElemId x);
Subgroup center(const GroupPtr& g);

Partition conjugacy_classes(const FiniteGroup& g);

struct QuotientGroup {
  GroupPtr parent;
  Subgroup kernel;
  std::vector<ElemId> coset_reps;       // least id in each coset, ascending
  std::vector<std::uint32_t> coset_of;  // parent id -> coset index
  GroupPtr group;                       // action on cosets by left translation
  std::vector<ElemId> projection;       // parent id -> id in `group`
};

/// Throws Error(NotNormal).
QuotientGroup quotient(const Subgroup& normal);

struct DerivedSeries {
  std::vector<Subgroup> terms;
  bool soluble = false;
  std::optional<std::size_t> derived_length;
};

DerivedSeries derived_series(const GroupPtr& g);

}  // namespace reid
