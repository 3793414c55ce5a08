#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reid/group.hpp"

namespace reid {

/// A homomorphism between finite groups as a dense id -> id map.
class GroupMorphism {
 public:
  /// Validates map(xy) = map(x)map(y) over all pairs. Throws NotAHomomorphism.
  GroupMorphism(GroupPtr source, GroupPtr target, std::vector<ElemId> map);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  ElemId operator()(ElemId g) const { return map_[g]; }
  std::span<const ElemId> map() const noexcept { return map_; }

 private:
  GroupPtr source_, target_;
  std::vector<ElemId> map_;
};

class Automorphism {
 public:
  /// Validates the homomorphism property over all pairs and bijectivity.
  /// Throws NotAHomomorphism or NotBijective.
  Automorphism(GroupPtr group, std::vector<ElemId> map);

  static Automorphism identity(const GroupPtr& g);
  /// z -> x z x^-1
  static Automorphism inner(const GroupPtr& g, ElemId x);

  const GroupPtr& group() const noexcept { return group_; }
  ElemId operator()(ElemId g) const { return map_[g]; }
  ElemId preimage(ElemId g) const { return inverse_[g]; }
  std::span<const ElemId> map() const noexcept { return map_; }
  std::size_t order() const noexcept { return order_; }
  bool is_identity() const noexcept { return order_ == 1; }

  /// (*this) after `other`: g -> this(other(g)).
  Automorphism after(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.group_ == b.group_ && a.map_ == b.map_;
  }

 private:
  struct Trusted {};
  Automorphism(Trusted, GroupPtr group, std::vector<ElemId> map);
  void finish();

  GroupPtr group_;
  std::vector<ElemId> map_;
  std::vector<ElemId> inverse_;
  std::size_t order_ = 1;
};

/// Extends generator images multiplicatively and validates the result.
/// Throws NotAHomomorphism (inconsistent relations) or NotBijective.
Automorphism automorphism_from_images(const GroupPtr& g, std::span<const ElemId> generator_images);

/// Same extension over an arbitrary generating list; returns nothing when the
/// images do not extend to a bijective homomorphism.
std::optional<Automorphism> try_extend(const GroupPtr& g, std::span<const ElemId> generators,
                                       std::span<const ElemId> images);

/// tau_x o phi
Automorphism compose_with_inner(const Automorphism& phi, ElemId x);

struct RestrictedAutomorphism {
  GroupPtr group;                // the subgroup as its own group
  std::vector<ElemId> embedding; // subgroup id -> parent id
  Automorphism aut;
};

/// Throws Error(NotInvariant) unless phi(H) = H.
RestrictedAutomorphism restrict(const Automorphism& phi, const Subgroup& h);

struct InducedAutomorphism {
  QuotientGroup quotient;
  Automorphism aut;
};

/// gN -> phi(g)N. Throws NotNormal or NotInvariant.
InducedAutomorphism induce_on_quotient(const Automorphism& phi, const Subgroup& n);

bool is_invariant(const Automorphism& phi, const Subgroup& h);

Subgroup fixed_subgroup(const Automorphism& phi);

struct AutomorphismSearchOptions {
  std::size_t max_candidates = 50'000'000;  // image tuples tried; BudgetExceeded beyond
};

/// Every automorphism, found by searching images of a minimal generating set.
/// Sorted by map, identity first.
std::vector<Automorphism> all_automorphisms(const GroupPtr& g,
                                            const AutomorphismSearchOptions& options = {});

}  // namespace reid
