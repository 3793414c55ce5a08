#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reid/group.hpp"
#include "reid/lattice.hpp"
#include "reid/morphism.hpp"
#include "reid/twisted.hpp"

namespace reid {

/// One step G^(i) > G^(i+1) of the derived series under phi.
struct ReductionLevel {
  std::size_t term_order = 0;
  std::size_t r_phi = 0;          // R(phi_i) on G^(i)
  std::size_t fixed_alpha = 0;    // |C(alpha_i)| on A_i = G^(i) / G^(i+1)
  std::size_t r_next = 0;         // R(phi_{i+1}) on G^(i+1)
  bool inequality_ok = false;     // r_next <= r_phi * fixed_alpha
  bool shift_ok = false;          // R(tau_g o phi_i) = R(phi_i) for sampled g
};

struct ReductionTrace {
  DerivedSeries series;
  std::vector<ReductionLevel> levels;  // one per nontrivial term
  bool invariance_ok = false;          // every derived term is phi-invariant

  bool ok() const;
};

/// Walks the derived series. Throws Error(NotSoluble).
ReductionTrace derived_reduction(const Automorphism& phi, std::size_t shift_samples = 4);

struct InnerBound {
  std::size_t inner_order = 0;     // |G| / |Z(G)|
  std::size_t kernel_order = 0;    // |F|
  std::size_t quotient_rank = 0;   // rk(G/F)
  BigInt bound;                    // |F|! |F|^rk
  bool holds = false;
};

/// Maximal p-rank of a finite abelian group, from #{a : a^p = e}.
std::size_t abelian_rank(const FiniteGroup& a);

/// Throws Error(QuotientNotAbelian) when F is not normal or G/F is not abelian.
InnerBound inner_bound_check(const Subgroup& f);

struct SolubleProfile {
  std::size_t fixed_order = 0;
  std::optional<std::size_t> rank;  // absent when the group exceeds the rank cap
  std::size_t radical_order = 0;
  std::size_t radical_index = 0;
  std::size_t radical_derived_length = 0;
};

SolubleProfile soluble_profile(const Automorphism& phi, const LatticeOptions& options = {});

/// a_n(G) for n = 1..max_n against (n!)^rank(G).
struct SubgroupCountRow {
  std::size_t n = 0;
  std::size_t count = 0;
  BigInt bound;
  bool holds = false;
};

std::vector<SubgroupCountRow> subgroup_count_check(const GroupPtr& g, std::size_t max_n,
                                                   const LatticeOptions& options = {});

}  // namespace reid
