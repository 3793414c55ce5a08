#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "reid/group.hpp"

namespace reid::groups {

GroupPtr trivial();
/// Cyclic group of order n acting on n points.
GroupPtr cyclic(std::size_t n);
/// Dihedral group of the given order (2n symmetries of an n-gon).
GroupPtr dihedral(std::size_t order);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
/// Dicyclic group of order 4m; generalized quaternion when m is a power of two.
GroupPtr dicyclic(std::size_t m);
/// Quaternion group of order 2^k (k >= 3).
GroupPtr quaternion(std::size_t order);
/// Upper unitriangular 3x3 matrices over Z/p.
GroupPtr heisenberg(std::size_t p);
/// Direct product of cyclic groups with the given orders.
GroupPtr abelian(const std::vector<std::size_t>& orders);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Left regular representation of a group given by its multiplication on {0..n-1}.
GroupPtr regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                 const std::vector<std::size_t>& generators);

}  // namespace reid::groups
