#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reid/group.hpp"
#include "reid/morphism.hpp"

namespace reid {

using BigInt = boost::multiprecision::cpp_int;

/// The phi-twisted conjugacy classes {g}_phi: orbits of g -> x g phi(x)^-1.
struct TwistedPartition {
  GroupPtr group;
  Partition partition;

  std::size_t reidemeister_number() const noexcept { return partition.size(); }
  const std::vector<ElemId>& class_containing(ElemId g) const {
    return partition.classes[partition.class_of[g]];
  }
};

TwistedPartition reidemeister_classes(const Automorphism& phi);
std::size_t reidemeister_number(const Automorphism& phi);

/// Checks {g}_phi x = {gx}_{tau_{x^-1} o phi} for every class, and
/// R(tau_x o phi) = R(phi).
bool verify_shift(const Automorphism& phi, ElemId x);

struct ExtensionReport {
  std::size_t r_total = 0;       // R(phi)
  std::size_t r_quotient = 0;    // R(phi-bar) on G/H
  std::size_t r_restricted = 0;  // R(phi') on H
  std::size_t fixed_quotient_size = 0;  // |C(phi-bar)|
  bool surjectivity_ok = false;  // projection maps classes onto classes
  bool bound_a_ok = false;       // R(phi') <= R(phi) |C(phi-bar)|
  bool intersection_applies = false;
  bool intersection_b_ok = false;  // vacuously true when C(phi-bar) is nontrivial

  bool ok() const noexcept { return surjectivity_ok && bound_a_ok && intersection_b_ok; }
};

/// Throws NotNormal or NotInvariant.
ExtensionReport verify_extension(const Automorphism& phi, const Subgroup& h);

/// 2^(2^r)
BigInt jabara_alpha(unsigned r);

struct JabaraResult {
  std::size_t fixed_order = 0;
  std::size_t reidemeister = 0;
  bool shortcut = false;  // 2^R >= 64, so the bound exceeds any enumerable |C|
  bool holds = false;
};

JabaraResult jabara_check(const Automorphism& phi);

/// Counts G-conjugation orbits on the coset G.phi inside G x| <phi>, realized
/// as a permutation group on the elements of G. Throws ClosureCapExceeded.
std::size_t semidirect_coset_oracle(const Automorphism& phi, const GroupOptions& options = {});

struct SigmaWitness {
  std::vector<std::vector<ElemId>> shifted_family;  // distinct sets {g}_phi x, sorted
  std::size_t action_degree = 0;
  GroupPtr action_image;  // R_n, the image of G in S_n
  Subgroup kernel;
  bool kernel_invariant = false;
  std::optional<QuotientGroup> quotient;
  std::optional<Automorphism> phi_on_quotient;
  std::size_t quotient_reidemeister = 0;
  bool bijection_ok = false;
};

/// Left translation of G on the family of shifted Reidemeister classes, its
/// kernel K, and the induced automorphism of G/K.
SigmaWitness sigma_witness(const Automorphism& phi);

/// True iff every Reidemeister class of phi is a union of left cosets of H.
bool class_coset_union(const Automorphism& phi, const Subgroup& h);

}  // namespace reid
