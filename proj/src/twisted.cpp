#include "reid/twisted.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reid/error.hpp"

namespace reid {

TwistedPartition reidemeister_classes(const Automorphism& phi) {
  const GroupPtr& g = phi.group();
  // Moves g -> s g phi(s)^-1 for generators s generate the whole action.
  std::vector<std::vector<ElemId>> moves;
  for (ElemId s : g->generator_ids()) {
    ElemId tail = g->inv(phi(s));
    std::vector<ElemId> move(g->order());
    for (ElemId x = 0; x < g->order(); ++x) move[x] = g->mul(g->mul(s, x), tail);
    moves.push_back(std::move(move));
  }
  return {g, orbit_partition(g->order(), moves)};
}

std::size_t reidemeister_number(const Automorphism& phi) {
  return reidemeister_classes(phi).reidemeister_number();
}

bool verify_shift(const Automorphism& phi, ElemId x) {
  const GroupPtr& g = phi.group();
  TwistedPartition base = reidemeister_classes(phi);
  TwistedPartition shifted = reidemeister_classes(compose_with_inner(phi, g->inv(x)));
  if (base.reidemeister_number() != shifted.reidemeister_number()) return false;
  for (const auto& cls : base.partition.classes) {
    std::vector<ElemId> translated;
    translated.reserve(cls.size());
    for (ElemId h : cls) translated.push_back(g->mul(h, x));
    std::sort(translated.begin(), translated.end());
    if (translated != shifted.class_containing(translated.front())) return false;
  }
  return reidemeister_number(compose_with_inner(phi, x)) == base.reidemeister_number();
}

ExtensionReport verify_extension(const Automorphism& phi, const Subgroup& h) {
  InducedAutomorphism induced = induce_on_quotient(phi, h);
  RestrictedAutomorphism restricted = restrict(phi, h);
  TwistedPartition total = reidemeister_classes(phi);
  TwistedPartition on_quotient = reidemeister_classes(induced.aut);
  TwistedPartition on_sub = reidemeister_classes(restricted.aut);

  ExtensionReport r;
  r.r_total = total.reidemeister_number();
  r.r_quotient = on_quotient.reidemeister_number();
  r.r_restricted = on_sub.reidemeister_number();
  r.fixed_quotient_size = fixed_subgroup(induced.aut).order();

  // Each phi-class must land inside one phi-bar-class, and every phi-bar-class must be hit.
  const auto& proj = induced.quotient.projection;
  std::vector<bool> hit(r.r_quotient, false);
  bool well_defined = true;
  for (const auto& cls : total.partition.classes) {
    std::uint32_t target = on_quotient.partition.class_of[proj[cls.front()]];
    for (ElemId x : cls)
      if (on_quotient.partition.class_of[proj[x]] != target) well_defined = false;
    hit[target] = true;
  }
  r.surjectivity_ok = well_defined && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) &&
                      r.r_quotient <= r.r_total;
  r.bound_a_ok = r.r_restricted <= r.r_total * r.fixed_quotient_size;

  r.intersection_applies = r.fixed_quotient_size == 1;
  r.intersection_b_ok = true;
  if (r.intersection_applies) {
    for (const auto& cls : on_sub.partition.classes) {
      std::vector<ElemId> in_parent;
      for (ElemId k : cls) in_parent.push_back(restricted.embedding[k]);
      std::sort(in_parent.begin(), in_parent.end());
      std::vector<ElemId> expected;
      for (ElemId x : total.class_containing(in_parent.front()))
        if (h.contains(x)) expected.push_back(x);
      if (expected != in_parent) r.intersection_b_ok = false;
    }
  }
  return r;
}

BigInt jabara_alpha(unsigned r) {
  BigInt exponent = BigInt(1) << r;
  return BigInt(1) << static_cast<unsigned>(exponent);
}

JabaraResult jabara_check(const Automorphism& phi) {
  JabaraResult res;
  res.fixed_order = fixed_subgroup(phi).order();
  res.reidemeister = reidemeister_number(phi);
  if (res.reidemeister >= 6) {
    res.shortcut = true;
    res.holds = true;
    return res;
  }
  res.holds = BigInt(res.fixed_order) <= jabara_alpha(static_cast<unsigned>(res.reidemeister));
  return res;
}

std::size_t semidirect_coset_oracle(const Automorphism& phi, const GroupOptions& options) {
  const GroupPtr& g = phi.group();
  const std::size_t n = g->order();
  auto left_translation = [&](ElemId x) {
    std::vector<Point> images(n);
    for (ElemId h = 0; h < n; ++h) images[h] = g->mul(x, h);
    return Perm(std::move(images));
  };
  std::vector<Point> phi_images(phi.map().begin(), phi.map().end());
  Perm phi_perm(std::move(phi_images));

  // Holomorph action h -> x phi^k(h); faithful, so this realizes G x| <phi>.
  std::vector<Perm> gens;
  for (ElemId s : g->generator_ids()) gens.push_back(left_translation(s));
  gens.push_back(phi_perm);
  GroupPtr semi = generate_group(n, std::move(gens), options);
  if (semi->order() != n * phi.order())
    throw Error(ErrorKind::ClosureCapExceeded, "semidirect product has unexpected order");

  std::vector<ElemId> coset(n);
  std::vector<ElemId> position(semi->order(), UINT32_MAX);
  for (ElemId x = 0; x < n; ++x) {
    coset[x] = semi->id_of(left_translation(x) * phi_perm);
    position[coset[x]] = x;
  }
  std::vector<std::vector<ElemId>> moves;
  for (ElemId s : g->generator_ids()) {
    ElemId ls = semi->id_of(left_translation(s));
    std::vector<ElemId> move(n);
    for (ElemId x = 0; x < n; ++x) {
      ElemId c = semi->conj(ls, coset[x]);
      if (position[c] == UINT32_MAX)
        throw Error(ErrorKind::ClosureCapExceeded, "conjugate left the coset");
      move[x] = position[c];
    }
    moves.push_back(std::move(move));
  }
  return orbit_partition(n, moves).size();
}

SigmaWitness sigma_witness(const Automorphism& phi) {
  const GroupPtr& g = phi.group();
  const std::size_t n = g->order();
  TwistedPartition classes = reidemeister_classes(phi);

  std::set<std::vector<ElemId>> family;
  for (const auto& cls : classes.partition.classes)
    for (ElemId x = 0; x < n; ++x) {
      std::vector<ElemId> shifted;
      shifted.reserve(cls.size());
      for (ElemId h : cls) shifted.push_back(g->mul(h, x));
      std::sort(shifted.begin(), shifted.end());
      family.insert(std::move(shifted));
    }

  SigmaWitness w{std::vector<std::vector<ElemId>>(family.begin(), family.end()),
                 family.size(),
                 nullptr,
                 trivial_subgroup(g),
                 false,
                 std::nullopt,
                 std::nullopt,
                 0,
                 false};
  std::map<std::vector<ElemId>, Point> slot;
  for (Point i = 0; i < w.shifted_family.size(); ++i) slot[w.shifted_family[i]] = i;

  auto sigma = [&](ElemId y) {
    std::vector<Point> images(w.action_degree);
    for (Point i = 0; i < w.action_degree; ++i) {
      std::vector<ElemId> moved;
      for (ElemId h : w.shifted_family[i]) moved.push_back(g->mul(y, h));
      std::sort(moved.begin(), moved.end());
      auto it = slot.find(moved);
      if (it == slot.end()) throw Error(ErrorKind::NotInvariant, "left translation leaves the family");
      images[i] = it->second;
    }
    return Perm(std::move(images));
  };

  ElemSet kernel(n);
  std::vector<Perm> image_gens;
  for (ElemId s : g->generator_ids()) image_gens.push_back(sigma(s));
  for (ElemId y = 0; y < n; ++y)
    if (sigma(y).is_identity()) kernel.insert(y);
  w.action_image = generate_group(w.action_degree, std::move(image_gens));
  w.kernel = Subgroup(g, std::move(kernel));
  w.kernel_invariant = is_invariant(phi, w.kernel);
  if (!w.kernel_invariant) return w;

  InducedAutomorphism induced = induce_on_quotient(phi, w.kernel);
  TwistedPartition on_quotient = reidemeister_classes(induced.aut);
  w.quotient_reidemeister = on_quotient.reidemeister_number();

  // Bijection: each class projects into one quotient class, distinct classes
  // to distinct ones, and the counts agree.
  std::vector<std::int64_t> owner(w.quotient_reidemeister, -1);
  bool ok = w.quotient_reidemeister == classes.reidemeister_number();
  for (std::size_t c = 0; ok && c < classes.partition.size(); ++c) {
    const auto& cls = classes.partition.classes[c];
    std::uint32_t target = on_quotient.partition.class_of[induced.quotient.projection[cls.front()]];
    for (ElemId x : cls)
      if (on_quotient.partition.class_of[induced.quotient.projection[x]] != target) ok = false;
    if (owner[target] >= 0) ok = false;
    owner[target] = static_cast<std::int64_t>(c);
  }
  w.bijection_ok = ok && class_coset_union(phi, w.kernel);
  w.quotient = std::move(induced.quotient);
  w.phi_on_quotient = std::move(induced.aut);
  return w;
}

bool class_coset_union(const Automorphism& phi, const Subgroup& h) {
  const GroupPtr& g = phi.group();
  TwistedPartition classes = reidemeister_classes(phi);
  std::vector<ElemId> hs = h.ids();
  for (ElemId x = 0; x < g->order(); ++x)
    for (ElemId k : hs)
      if (classes.partition.class_of[g->mul(x, k)] != classes.partition.class_of[x]) return false;
  return true;
}

}  // namespace reid
