#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reid/group.hpp"
#include "reid/morphism.hpp"

namespace reid {

using ModP = std::uint64_t;

/// Irreducible characters of a finite group, with values reduced mod a prime
/// p that is 1 mod the exponent and larger than 2 sqrt|G|.
struct ModPCharacterTable {
  GroupPtr group;
  ModP prime = 0;
  Partition classes;
  std::vector<ElemId> representatives;  // least element of each class
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint32_t> inverse_class;  // class of g^-1
  std::vector<std::vector<ModP>> rows;       // rows[chi][class]
  std::vector<std::uint64_t> degrees;        // chi(1) as an ordinary integer

  std::size_t class_count() const noexcept { return classes.size(); }
};

struct CharacterOptions {
  std::size_t order_cap = 500;
  bool abelian_fast_path = true;
  std::size_t abelian_search_cap = 1'000'000;  // image tuples before falling back to splitting
};

/// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order).
ModP choose_prime(std::size_t order, std::size_t exponent);

/// Throws CapExceeded or PrimeSearchFailed. Rows are ordered by (degree, values).
ModPCharacterTable character_table(const GroupPtr& g, const CharacterOptions& options = {});

/// Row and column orthogonality, mod p.
bool orthogonality_holds(const ModPCharacterTable& table);

struct ClassPermutation {
  std::vector<std::uint32_t> perm;  // class(phi(g)) = perm[class(g)]
};

ClassPermutation class_permutation(const ModPCharacterTable& table, const Automorphism& phi);

/// Rows chi with chi o phi = chi.
std::size_t fixed_character_count(const ModPCharacterTable& table, const ClassPermutation& cp);

struct TbftResult {
  std::size_t reidemeister = 0;
  std::size_t fixed_characters = 0;
  bool equal = false;
};

TbftResult verify_tbft_finite(const Automorphism& phi, const ModPCharacterTable& table);
TbftResult verify_tbft_finite(const Automorphism& phi, const CharacterOptions& options = {});

namespace modp {
ModP pow(ModP base, std::uint64_t e, ModP p);
ModP inv(ModP a, ModP p);
bool is_prime(std::uint64_t n);
/// Least generator of the multiplicative group mod p.
ModP primitive_root(ModP p);
}  // namespace modp

}  // namespace reid
