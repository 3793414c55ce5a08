#pragma once

#include <cstddef>
#include <vector>

#include "reid/group.hpp"

namespace reid {

struct LatticeOptions {
  std::size_t max_subgroups = 50000;  // BudgetExceeded beyond this
  std::size_t rank_order_cap = 200;   // largest group for a full rank sweep
};

/// Every subgroup, ordered by (order, least differing member id).
/// Throws Error(BudgetExceeded).
std::vector<Subgroup> all_subgroups(const GroupPtr& g, const LatticeOptions& options = {});

/// All subgroups of index n; empty when n does not divide |G|.
std::vector<Subgroup> subgroups_of_index(const GroupPtr& g, std::size_t n,
                                         const LatticeOptions& options = {});

/// Normal subgroups, built as joins of normal closures of conjugacy classes.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const LatticeOptions& options = {});

/// A smallest generating set of `h`, found by exhaustive search by size.
std::vector<ElemId> minimal_generating_set(const Subgroup& h);
std::size_t min_generators(const Subgroup& h);

/// max d(H) over all subgroups H. Throws Error(BudgetExceeded) above rank_order_cap.
std::size_t rank(const GroupPtr& g, const LatticeOptions& options = {});

/// Intersection of all subgroups whose index equals [G:H].
Subgroup characteristic_core(const Subgroup& h, const LatticeOptions& options = {});

/// The largest soluble normal subgroup.
Subgroup soluble_radical(const GroupPtr& g, const LatticeOptions& options = {});

}  // namespace reid
