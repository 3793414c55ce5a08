#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "reid/abelian.hpp"
#include "reid/integer_matrix.hpp"

namespace reid {

/// An endomorphism of Z(p^inf)^d = (Z[1/p]/Z)^d given by an integer matrix.
struct QuasicyclicEndo {
  unsigned p = 2;
  std::size_t d = 1;
  IntMatrix matrix;  // d x d

  /// Throws Error(IllFormedEndo) for a non-prime p or a wrongly sized matrix.
  void validate() const;
  bool is_automorphism() const;  // p does not divide det(M)
};

/// |{x in (Z/p^level)^d : (1 - M) x = 0}|, by enumeration of the truncation.
std::uint64_t fixed_points_at_level(const QuasicyclicEndo& q, unsigned level);

/// The count predicted at a truncation level from the Smith form of 1 - M.
BigInt predicted_fixed_at_level(const QuasicyclicEndo& q, unsigned level);

struct QuasicyclicFixedReport {
  BigInt det_one_minus;  // det(1 - M)
  Count fixed;           // p^v_p(det) or INFINITE
  Count reidemeister;    // 1 or INFINITE
  unsigned stable_level = 0;  // levels >= this give the final count
  std::vector<std::pair<unsigned, std::uint64_t>> truncation_counts;
  bool truncation_consistent = false;  // enumeration agrees with Smith-form prediction
  bool formula_matches = false;        // stable truncated count equals p^v_p(det)
  bool surjectivity_checked = false;   // 1 - M hits all of level 1 (R = 1)
};

struct QuasicyclicOptions {
  unsigned truncation_level = 4;
  std::uint64_t enumeration_cap = 20'000'000;
};

QuasicyclicFixedReport quasicyclic_fixed(const QuasicyclicEndo& q, const QuasicyclicOptions& options = {});
Count quasicyclic_R(const QuasicyclicEndo& q);

/// An element of Z(p^inf)^d: coordinates numerators[i] / p^level.
struct QuasicyclicElement {
  std::vector<long long> numerators;
  unsigned level = 0;
};

struct FiniteGeneratorForm {
  std::vector<QuasicyclicElement> generators;
};

/// The image N(Z(p^inf)^m) for an integer d x m matrix N.
struct DivisibleImageForm {
  IntMatrix image;
};

using QuasicyclicSubgroup = std::variant<FiniteGeneratorForm, DivisibleImageForm>;

struct QuasicyclicQuotientReport {
  bool finite = false;
  BigInt order;  // meaningful when finite
  std::size_t quotient_dimension = 0;
  bool dichotomy_ok = false;  // H finite, or G/H = Z(p^inf)^d' with d' < d
  bool structure_checked = false;
};

/// Throws Error(UnsupportedSubgroupForm).
QuasicyclicQuotientReport quasicyclic_quotient(unsigned p, std::size_t d, const QuasicyclicSubgroup& h,
                                               const QuasicyclicOptions& options = {});

struct QuasicyclicFinFix {
  Count reidemeister;
  Count fixed;
  bool pass = false;
};

QuasicyclicFinFix fin_fix_check(const QuasicyclicEndo& q);

}  // namespace reid
