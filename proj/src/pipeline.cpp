#include "reid/pipeline.hpp"

#include <algorithm>
#include <unordered_map>

#include "reid/error.hpp"

namespace reid {

namespace {

// `inner` (a subgroup of the parent of `outer`) seen inside outer.as_group().
Subgroup relative(const Subgroup& inner, const RestrictedAutomorphism& outer) {
  std::unordered_map<ElemId, ElemId> local;
  for (std::size_t k = 0; k < outer.embedding.size(); ++k) local.emplace(outer.embedding[k], static_cast<ElemId>(k));
  ElemSet members(outer.group->order());
  inner.members().for_each([&](ElemId g) { members.insert(local.at(g)); });
  return Subgroup(outer.group, std::move(members));
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool ReductionTrace::ok() const {
  return invariance_ok && std::all_of(levels.begin(), levels.end(),
                                      [](const ReductionLevel& l) { return l.inequality_ok && l.shift_ok; });
}

ReductionTrace derived_reduction(const Automorphism& phi, std::size_t shift_samples) {
  const GroupPtr& g = phi.group();
  ReductionTrace trace;
  trace.series = derived_series(g);
  if (!trace.series.soluble) throw Error(ErrorKind::NotSoluble, "derived series does not reach the trivial group");

  trace.invariance_ok = std::all_of(trace.series.terms.begin(), trace.series.terms.end(),
                                    [&](const Subgroup& t) { return is_invariant(phi, t); });
  if (!trace.invariance_ok) return trace;

  const auto& terms = trace.series.terms;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    RestrictedAutomorphism phi_i = restrict(phi, terms[i]);
    ReductionLevel level;
    level.term_order = terms[i].order();
    level.r_phi = reidemeister_number(phi_i.aut);

    InducedAutomorphism alpha = induce_on_quotient(phi_i.aut, relative(terms[i + 1], phi_i));
    level.fixed_alpha = fixed_subgroup(alpha.aut).order();

    level.r_next = terms[i + 1].is_trivial() ? 1 : reidemeister_number(restrict(phi, terms[i + 1]).aut);
    level.inequality_ok = level.r_next <= level.r_phi * level.fixed_alpha;

    // Evenly spaced elements of G^(i), always including the last one.
    const std::size_t n = phi_i.group->order();
    const std::size_t samples = std::min(shift_samples, n);
    level.shift_ok = true;
    for (std::size_t s = 0; s < samples; ++s) {
      auto x = static_cast<ElemId>(samples == 1 ? n - 1 : s * (n - 1) / (samples - 1));
      if (reidemeister_number(compose_with_inner(phi_i.aut, x)) != level.r_phi) level.shift_ok = false;
    }
    trace.levels.push_back(level);
  }
  return trace;
}

std::size_t abelian_rank(const FiniteGroup& a) {
  std::size_t best = 0;
  for (std::size_t p : prime_divisors(a.order())) {
    std::size_t killed = 0;
    for (ElemId x = 0; x < a.order(); ++x)
      if (a.pow(x, static_cast<std::int64_t>(p)) == FiniteGroup::kIdentity) ++killed;
    std::size_t r = 0;
    for (std::size_t v = 1; v < killed; v *= p) ++r;
    best = std::max(best, r);
  }
  return best;
}

InnerBound inner_bound_check(const Subgroup& f) {
  if (!f.is_normal()) throw Error(ErrorKind::QuotientNotAbelian, "F is not normal");
  QuotientGroup q = quotient(f);
  if (!q.group->is_abelian()) throw Error(ErrorKind::QuotientNotAbelian, "G/F is not abelian");

  const GroupPtr& g = f.parent();
  InnerBound r;
  r.inner_order = g->order() / center(g).order();
  r.kernel_order = f.order();
  r.quotient_rank = abelian_rank(*q.group);
  r.bound = factorial(r.kernel_order) * boost::multiprecision::pow(BigInt(r.kernel_order),
                                                                   static_cast<unsigned>(r.quotient_rank));
  r.holds = BigInt(r.inner_order) <= r.bound;
  return r;
}

SolubleProfile soluble_profile(const Automorphism& phi, const LatticeOptions& options) {
  const GroupPtr& g = phi.group();
  SolubleProfile p;
  p.fixed_order = fixed_subgroup(phi).order();
  if (g->order() <= options.rank_order_cap) p.rank = rank(g, options);
  Subgroup radical = soluble_radical(g, options);
  p.radical_order = radical.order();
  p.radical_index = radical.index();
  p.radical_derived_length = derived_series(radical.as_group()).derived_length.value_or(0);
  return p;
}

std::vector<SubgroupCountRow> subgroup_count_check(const GroupPtr& g, std::size_t max_n,
                                                   const LatticeOptions& options) {
  const std::size_t r = rank(g, options);
  std::vector<SubgroupCountRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    SubgroupCountRow row;
    row.n = n;
    row.count = subgroups_of_index(g, n, options).size();
    row.bound = boost::multiprecision::pow(factorial(n), static_cast<unsigned>(r));
    row.holds = BigInt(row.count) <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace reid
