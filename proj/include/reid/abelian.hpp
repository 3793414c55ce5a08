#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reid/integer_matrix.hpp"

namespace reid {

/// A cardinality that may be INFINITE. Infinity is a value here, not an error.
class Count {
 public:
  Count() = default;
  Count(BigInt value) : value_(std::move(value)) {}  // NOLINT(implicit)
  static Count infinite() {
    Count c;
    c.infinite_ = true;
    return c;
  }

  bool is_finite() const noexcept { return !infinite_; }
  const BigInt& value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const Count&, const Count&) = default;

 private:
  BigInt value_ = 0;
  bool infinite_ = false;
};

/// Isomorphism type Z^free_rank + Z/d_1 + ... + Z/d_m, with 1 < d_1 | d_2 | ...
struct AbelianShape {
  std::size_t free_rank = 0;
  std::vector<BigInt> invariant_factors;

  Count order() const;
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  friend bool operator==(const AbelianShape&, const AbelianShape&) = default;
};

/// Z^k modulo the column span of an integer relation matrix L (k x m, m >= 0).
class LatticeAbelianGroup {
 public:
  LatticeAbelianGroup(std::size_t ambient_rank, IntMatrix relations);

  static LatticeAbelianGroup free(std::size_t rank);
  /// Z/n_1 + ... + Z/n_k
  static LatticeAbelianGroup cyclic_sum(const std::vector<BigInt>& orders);

  std::size_t ambient_rank() const noexcept { return rank_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const AbelianShape& shape() const noexcept { return shape_; }
  const SnfResult& snf() const noexcept { return snf_; }
  bool is_finite() const noexcept { return shape_.free_rank == 0; }

  /// v in column-span(L)
  bool is_relation(const IntVector& v) const;

 private:
  std::size_t rank_;
  IntMatrix relations_;
  SnfResult snf_;
  AbelianShape shape_;
};

/// Z^k / span(sub), where every column of `sub` lies in Z^k.
AbelianShape quotient_shape(std::size_t k, const IntMatrix& sub);

/// An endomorphism of Z^k / L given by a k x k matrix with M L in span(L).
class LatticeAbelianEndo {
 public:
  /// Throws Error(IllFormedEndo).
  LatticeAbelianEndo(LatticeAbelianGroup group, IntMatrix matrix);

  const LatticeAbelianGroup& group() const noexcept { return group_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  /// 1 - M
  IntMatrix one_minus() const;
  bool is_automorphism() const noexcept { return automorphism_; }

 private:
  LatticeAbelianGroup group_;
  IntMatrix matrix_;
  bool automorphism_ = false;
};

/// |Coker(1 - phi)|, INFINITE when a zero invariant factor appears.
Count reidemeister_abelian(const LatticeAbelianEndo& e);

/// Ker(1 - phi) = C(phi).
AbelianShape fixed_abelian(const LatticeAbelianEndo& e);

struct PrimaryPart {
  BigInt prime;
  std::vector<unsigned> exponents;  // descending
  friend bool operator==(const PrimaryPart&, const PrimaryPart&) = default;
};

struct TorsionDecomposition {
  std::size_t free_rank = 0;
  std::vector<PrimaryPart> parts;  // ascending prime
};

TorsionDecomposition torsion_decompose(const AbelianShape& shape);
TorsionDecomposition torsion_decompose(const LatticeAbelianGroup& a);

/// Elementwise model of a finite Z^k / L, in Smith coordinates.
class FiniteAbelianModel {
 public:
  /// Throws Error(CapExceeded) when the group is infinite or larger than `cap`.
  explicit FiniteAbelianModel(const LatticeAbelianGroup& group, std::size_t cap = 1'000'000);

  std::size_t order() const noexcept { return order_; }
  std::size_t index_of(const IntVector& x) const;
  /// A representative in Z^k.
  IntVector lift(std::size_t index) const;
  /// The image of every element under M, as indices.
  std::vector<std::size_t> apply(const IntMatrix& m) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

 private:
  std::size_t ambient_rank_;
  IntMatrix u_, u_inv_;
  std::vector<std::size_t> moduli_;  // d_i for nontrivial coordinates
  std::vector<std::size_t> coords_;  // which Smith coordinate each modulus belongs to
  std::size_t order_ = 1;
};

/// Orbits of x -> x + g - phi(g) on a finite group, by elementwise union-find.
std::size_t twisted_orbit_count(const FiniteAbelianModel& model, const IntMatrix& m);

struct AbelianWitness {
  LatticeAbelianGroup quotient;  // F = A / Im(1 - phi)
  IntMatrix induced;             // phi acting on F
  BigInt order;
  std::vector<IntVector> coset_reps;
  bool induced_is_identity = false;
  bool singleton_classes = false;  // twisted classes of the induced map on F
  bool bijection_ok = false;       // class pullback checked elementwise
};

struct WitnessOptions {
  std::size_t enumeration_cap = 100000;  // elementwise checks on A when finite
  long long box_radius = 3;              // sample box for infinite A
};

/// Throws Error(InfiniteReidemeister).
AbelianWitness tbft_witness_abelian(const LatticeAbelianEndo& e, const WitnessOptions& options = {});

struct FixedOnTorsion {
  bool applies = false;  // det(1 - M_free) != 0
  BigInt det_free;
  AbelianShape fixed_total;
  AbelianShape fixed_torsion;
  bool holds = false;
};

/// C(phi) = C(phi_T) when the induced map on A/T has no nontrivial fixed points.
FixedOnTorsion check_fixed_on_torsion(const LatticeAbelianEndo& e);

struct FinFixReport {
  Count reidemeister;
  Count fixed;
  bool pass = false;  // R finite implies |C| finite
};

FinFixReport fin_fix_check(const LatticeAbelianEndo& e);

}  // namespace reid
