#include "reid/quasicyclic.hpp"

#include <algorithm>
#include <unordered_set>

#include "reid/characters.hpp"
#include "reid/error.hpp"

namespace reid {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

long long reduce(const BigInt& x, std::uint64_t mod) {
  BigInt r = x % mod;
  if (r < 0) r += mod;
  return static_cast<long long>(r);
}

// Iterates every vector of (Z/mod)^n.
template <class F>
void for_each_vector(std::size_t n, std::uint64_t mod, F&& f) {
  std::vector<std::uint64_t> x(n, 0);
  for (;;) {
    f(x);
    std::size_t t = 0;
    while (t < n && ++x[t] == mod) x[t++] = 0;
    if (t == n) return;
  }
}

std::vector<std::uint64_t> apply_mod(const std::vector<std::vector<long long>>& m,
                                     const std::vector<std::uint64_t>& x, std::uint64_t mod) {
  std::vector<std::uint64_t> y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += static_cast<__int128>(m[i][j]) * x[j];
    acc %= static_cast<__int128>(mod);
    if (acc < 0) acc += mod;
    y[i] = static_cast<std::uint64_t>(acc);
  }
  return y;
}

std::vector<std::vector<long long>> reduced_matrix(const IntMatrix& m, std::uint64_t mod) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = reduce(m(i, j), mod);
  return out;
}

std::uint64_t encode(const std::vector<std::uint64_t>& x, std::uint64_t mod) {
  std::uint64_t key = 0;
  for (auto it = x.rbegin(); it != x.rend(); ++it) key = key * mod + *it;
  return key;
}

IntMatrix one_minus(const QuasicyclicEndo& q) { return IntMatrix::identity(q.d) - q.matrix; }

}  // namespace

void QuasicyclicEndo::validate() const {
  if (!modp::is_prime(p)) throw Error(ErrorKind::IllFormedEndo, "p must be prime");
  if (d == 0 || matrix.rows() != d || matrix.cols() != d)
    throw Error(ErrorKind::IllFormedEndo, "quasicyclic matrix must be d x d with d >= 1");
}

bool QuasicyclicEndo::is_automorphism() const { return determinant(matrix) % p != 0; }

std::uint64_t fixed_points_at_level(const QuasicyclicEndo& q, unsigned level) {
  const std::uint64_t mod = ipow(q.p, level);
  auto a = reduced_matrix(one_minus(q), mod);
  std::uint64_t count = 0;
  for_each_vector(q.d, mod, [&](const std::vector<std::uint64_t>& x) {
    auto y = apply_mod(a, x, mod);
    if (std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; })) ++count;
  });
  return count;
}

BigInt predicted_fixed_at_level(const QuasicyclicEndo& q, unsigned level) {
  // Kernel of diag(s_i) on (Z/p^k)^d has order prod p^min(v_p(s_i), k), with s_i = 0 giving p^k.
  SnfResult snf = smith_normal_form(one_minus(q));
  BigInt count = 1;
  for (std::size_t i = 0; i < q.d; ++i) {
    unsigned v = i < snf.rank ? std::min(valuation(snf.D(i, i), q.p), level) : level;
    count *= BigInt(ipow(q.p, v));
  }
  return count;
}

QuasicyclicFixedReport quasicyclic_fixed(const QuasicyclicEndo& q, const QuasicyclicOptions& options) {
  q.validate();
  QuasicyclicFixedReport r;
  r.det_one_minus = determinant(one_minus(q));
  const bool finite = r.det_one_minus != 0;
  unsigned v = finite ? valuation(r.det_one_minus, q.p) : 0;
  if (finite) {
    r.fixed = BigInt(1) * BigInt(ipow(q.p, v));
    r.reidemeister = BigInt(1);
  } else {
    r.fixed = Count::infinite();
    r.reidemeister = Count::infinite();
  }

  SnfResult snf = smith_normal_form(one_minus(q));
  for (std::size_t i = 0; i < snf.rank; ++i)
    r.stable_level = std::max(r.stable_level, valuation(snf.D(i, i), q.p));

  // Levels 2..truncation_level, extended until the count has stabilized.
  unsigned last = std::max(options.truncation_level, finite ? r.stable_level : 0u);
  r.truncation_consistent = true;
  for (unsigned level = 2; level <= std::max(last, 2u); ++level) {
    if (ipow(q.p, level * static_cast<unsigned>(q.d)) > options.enumeration_cap) break;
    std::uint64_t count = fixed_points_at_level(q, level);
    r.truncation_counts.emplace_back(level, count);
    if (BigInt(count) != predicted_fixed_at_level(q, level)) r.truncation_consistent = false;
  }
  if (finite) {
    r.formula_matches = false;
    for (auto [level, count] : r.truncation_counts)
      if (level >= r.stable_level) r.formula_matches = BigInt(count) == r.fixed.value();
  } else {
    // Unbounded growth across levels witnesses the infinite fixed set.
    r.formula_matches = r.truncation_counts.size() >= 2;
    for (std::size_t i = 1; i < r.truncation_counts.size(); ++i)
      if (r.truncation_counts[i].second <= r.truncation_counts[i - 1].second) r.formula_matches = false;
  }

  if (finite) {
    // R = 1: every point of order p has a (1 - M)-preimage at level 1 + v.
    const unsigned level = 1 + v;
    const std::uint64_t mod = ipow(q.p, level);
    if (ipow(mod, static_cast<unsigned>(q.d)) <= options.enumeration_cap) {
      auto a = reduced_matrix(one_minus(q), mod);
      std::unordered_set<std::uint64_t> image;
      for_each_vector(q.d, mod, [&](const std::vector<std::uint64_t>& x) {
        image.insert(encode(apply_mod(a, x, mod), mod));
      });
      const std::uint64_t scale = ipow(q.p, v);
      bool all = true;
      for_each_vector(q.d, q.p, [&](const std::vector<std::uint64_t>& y) {
        std::vector<std::uint64_t> lifted(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) lifted[i] = y[i] * scale;
        if (!image.count(encode(lifted, mod))) all = false;
      });
      r.surjectivity_checked = all;
    }
  }
  return r;
}

Count quasicyclic_R(const QuasicyclicEndo& q) {
  q.validate();
  return determinant(one_minus(q)) != 0 ? Count(BigInt(1)) : Count::infinite();
}

QuasicyclicQuotientReport quasicyclic_quotient(unsigned p, std::size_t d, const QuasicyclicSubgroup& h,
                                               const QuasicyclicOptions& options) {
  if (!modp::is_prime(p) || d == 0) throw Error(ErrorKind::UnsupportedSubgroupForm, "need prime p and d >= 1");
  QuasicyclicQuotientReport r;

  if (const auto* fg = std::get_if<FiniteGeneratorForm>(&h)) {
    unsigned top = 0;
    for (const auto& g : fg->generators) {
      if (g.numerators.size() != d)
        throw Error(ErrorKind::UnsupportedSubgroupForm, "generator has wrong dimension");
      top = std::max(top, g.level);
    }
    if (top > 60 / std::max(1u, static_cast<unsigned>(std::log2(p)) + 1))
      throw Error(ErrorKind::UnsupportedSubgroupForm, "generator level too deep");
    // At level `top` the generators are integer vectors mod p^top; the
    // subgroup has order p^(top d) / |Z^d / (span G + p^top Z^d)|.
    const std::uint64_t mod = ipow(p, top);
    IntMatrix gens(d, fg->generators.size());
    for (std::size_t c = 0; c < fg->generators.size(); ++c)
      for (std::size_t i = 0; i < d; ++i)
        gens(i, c) = BigInt(fg->generators[c].numerators[i]) * BigInt(ipow(p, top - fg->generators[c].level));
    std::vector<BigInt> mods(d, BigInt(mod));
    AbelianShape co = quotient_shape(d, gens.hconcat(IntMatrix::diagonal(mods)));
    BigInt total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= mod;
    r.finite = true;
    r.order = total / co.order().value();
    r.quotient_dimension = d;
    r.dichotomy_ok = true;
    return r;
  }

  const IntMatrix& n = std::get<DivisibleImageForm>(h).image;
  if (n.rows() != d) throw Error(ErrorKind::UnsupportedSubgroupForm, "image matrix must have d rows");
  SnfResult snf = smith_normal_form(n);
  const std::size_t rk = snf.rank;
  r.finite = rk == 0;
  r.order = r.finite ? BigInt(1) : BigInt(0);
  r.quotient_dimension = d - rk;
  r.dichotomy_ok = r.finite || r.quotient_dimension < d;

  // |H[p]| must be p^rank: enumerate N x over level 1 + v and keep images of order p.
  unsigned v = 0;
  for (std::size_t i = 0; i < rk; ++i) v = std::max(v, valuation(snf.D(i, i), p));
  const unsigned level = 1 + v;
  const std::uint64_t mod = ipow(p, level);
  if (n.cols() > 0 && ipow(mod, static_cast<unsigned>(n.cols())) <= options.enumeration_cap) {
    auto a = reduced_matrix(n, mod);
    const std::uint64_t scale = ipow(p, v);
    std::unordered_set<std::uint64_t> torsion;
    for_each_vector(n.cols(), mod, [&](const std::vector<std::uint64_t>& x) {
      auto y = apply_mod(a, x, mod);
      if (std::all_of(y.begin(), y.end(), [&](std::uint64_t c) { return c % scale == 0; }))
        torsion.insert(encode(y, mod));
    });
    r.structure_checked = torsion.size() == ipow(p, static_cast<unsigned>(rk));
  } else if (n.cols() == 0) {
    r.structure_checked = true;
  }
  return r;
}

QuasicyclicFinFix fin_fix_check(const QuasicyclicEndo& q) {
  QuasicyclicFixedReport r = quasicyclic_fixed(q);
  return {r.reidemeister, r.fixed, !r.reidemeister.is_finite() || r.fixed.is_finite()};
}

}  // namespace reid
