#include "reid/characters.hpp"

#include <algorithm>
#include <cmath>

#include "reid/error.hpp"
#include "reid/twisted.hpp"

namespace reid {

namespace modp {

ModP pow(ModP base, std::uint64_t e, ModP p) {
  ModP result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

ModP inv(ModP a, ModP p) { return pow(a, p - 2, p); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModP primitive_root(ModP p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (ModP g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p == 2
}

}  // namespace modp

namespace {

using Vec = std::vector<ModP>;
using Mat = std::vector<Vec>;

constexpr std::uint64_t kPrimeSearchLimit = 1u << 30;

/// Basis of {c : M c = 0} for an r x m matrix M over F_p.
std::vector<Vec> nullspace(Mat m, std::size_t cols, ModP p) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    ModP s = modp::inv(m[row][c], p);
    for (auto& v : m[row]) v = v * s % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      ModP f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[row][k]) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct ClassData {
  Partition classes;
  std::vector<ElemId> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> inverse_class;
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d;
  d.classes = conjugacy_classes(g);
  for (const auto& cls : d.classes.classes) {
    d.reps.push_back(cls.front());
    d.sizes.push_back(cls.size());
  }
  for (ElemId r : d.reps) d.inverse_class.push_back(d.classes.class_of[g.inv(r)]);
  return d;
}

// Rows indexed by homomorphisms G -> mu_e in F_p^*, found by extending
// generator images along the Cayley graph.
std::optional<std::vector<Vec>> abelian_rows(const FiniteGroup& g, ModP p, std::size_t e,
                                             const ClassData& cd, std::size_t cap) {
  auto gens = g.generator_ids();
  ModP zeta = modp::pow(modp::primitive_root(p), (p - 1) / e, p);
  std::vector<std::vector<ModP>> choices;
  std::size_t tuples = 1;
  for (ElemId s : gens) {
    std::size_t o = g.element_order(s);
    ModP base = modp::pow(zeta, e / o, p);
    std::vector<ModP> c;
    for (std::size_t t = 0; t < o; ++t) c.push_back(modp::pow(base, t, p));
    tuples *= o;
    if (tuples > cap) return std::nullopt;
    choices.push_back(std::move(c));
  }

  std::vector<Vec> rows;
  std::vector<std::size_t> pos(gens.size(), 0);
  for (;;) {
    Vec value(g.order(), 0);
    value[FiniteGroup::kIdentity] = 1;
    std::vector<ElemId> queue{FiniteGroup::kIdentity};
    bool consistent = true;
    for (std::size_t head = 0; consistent && head < queue.size(); ++head) {
      ElemId x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ElemId y = g.mul(x, gens[k]);
        ModP v = value[x] * choices[k][pos[k]] % p;
        if (value[y] == 0) {
          value[y] = v;
          queue.push_back(y);
        } else if (value[y] != v) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      Vec row(cd.reps.size());
      for (std::size_t c = 0; c < cd.reps.size(); ++c) row[c] = value[cd.reps[c]];
      rows.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < gens.size() && ++pos[k] == choices[k].size()) pos[k++] = 0;
    if (k == gens.size()) break;
  }
  if (rows.size() != g.order()) return std::nullopt;
  return rows;
}

// Simultaneous eigenvectors of the class-multiplication operators.
std::vector<Vec> central_characters(const FiniteGroup& g, const ClassData& cd, ModP p) {
  const std::size_t r = cd.reps.size();
  // a[j][k][l] = #{(x, y) : x in C_j, y in C_k, xy = rep_l}
  std::vector<Mat> a(r, Mat(r, Vec(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (ElemId x : cd.classes.classes[j])
      for (std::size_t l = 0; l < r; ++l) {
        ElemId y = g.mul(g.inv(x), cd.reps[l]);
        ++a[j][cd.classes.class_of[y]][l];
      }
  for (auto& m : a)
    for (auto& row : m)
      for (auto& v : row) v %= p;

  // Spaces as lists of basis column vectors (length r).
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      all.push_back(std::move(v));
    }
    spaces.push_back(std::move(all));
  }

  for (std::size_t j = 1; j < r; ++j) {
    bool done = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (done) break;
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const std::size_t m = basis.size();
      // image[i] = A_j basis[i]
      std::vector<Vec> image(m, Vec(r, 0));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < r; ++k) {
          ModP acc = 0;
          for (std::size_t l = 0; l < r; ++l) acc = (acc + a[j][k][l] * basis[i][l]) % p;
          image[i][k] = acc;
        }
      std::size_t covered = 0;
      for (ModP lambda = 0; lambda < p && covered < m; ++lambda) {
        Mat sys(r, Vec(m, 0));  // columns: (A_j - lambda) basis[i]
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t k = 0; k < r; ++k)
            sys[k][i] = (image[i][k] + (p - lambda) * basis[i][k]) % p;
        auto kernel = nullspace(std::move(sys), m, p);
        if (kernel.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& c : kernel) {
          Vec v(r, 0);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[i] * basis[i][k]) % p;
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != m)
        throw Error(ErrorKind::PrimeSearchFailed, "class algebra did not split over F_p");
    }
    spaces = std::move(next);
  }

  std::vector<Vec> omegas;
  for (auto& basis : spaces) {
    if (basis.size() != 1) throw Error(ErrorKind::PrimeSearchFailed, "eigenspace did not split");
    Vec w = basis.front();
    ModP s = modp::inv(w[0], p);
    for (auto& v : w) v = v * s % p;
    omegas.push_back(std::move(w));
  }
  return omegas;
}

}  // namespace

ModP choose_prime(std::size_t order, std::size_t exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (std::uint64_t p = exponent + 1; p < kPrimeSearchLimit; p += exponent)
    if (static_cast<double>(p) > bound && modp::is_prime(p)) return p;
  throw Error(ErrorKind::PrimeSearchFailed, "no suitable prime below search limit");
}

ModPCharacterTable character_table(const GroupPtr& g, const CharacterOptions& options) {
  if (g->order() > options.order_cap)
    throw Error(ErrorKind::CapExceeded, "character table limited to order <= " +
                                            std::to_string(options.order_cap));
  const std::size_t n = g->order();
  const std::size_t e = g->exponent();
  ModP p = choose_prime(n, e);
  ClassData cd = class_data(*g);
  const std::size_t r = cd.reps.size();

  ModPCharacterTable t{g, p, cd.classes, cd.reps, cd.sizes, cd.inverse_class, {}, {}};

  std::optional<std::vector<Vec>> rows;
  if (options.abelian_fast_path && g->is_abelian())
    rows = abelian_rows(*g, p, e, cd, options.abelian_search_cap);
  if (rows) {
    for (auto& row : *rows) {
      t.rows.push_back(std::move(row));
      t.degrees.push_back(1);
    }
  } else {
    for (const Vec& w : central_characters(*g, cd, p)) {
      // chi(1)^2 = |G| / sum_j w_j w_j' / |C_j|
      ModP sum = 0;
      for (std::size_t j = 0; j < r; ++j)
        sum = (sum + w[j] * w[cd.inverse_class[j]] % p * modp::inv(cd.sizes[j] % p, p)) % p;
      ModP target = (n % p) * modp::inv(sum, p) % p;
      std::uint64_t degree = 0;
      for (std::uint64_t d = 1; d * d <= n; ++d)
        if (d * d % p == target) {
          degree = d;
          break;
        }
      if (degree == 0) throw Error(ErrorKind::PrimeSearchFailed, "degree has no small square root");
      Vec row(r);
      for (std::size_t j = 0; j < r; ++j)
        row[j] = w[j] * (degree % p) % p * modp::inv(cd.sizes[j] % p, p) % p;
      t.rows.push_back(std::move(row));
      t.degrees.push_back(degree);
    }
  }

  std::vector<std::size_t> order_idx(t.rows.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return t.rows[a] < t.rows[b];
  });
  std::vector<Vec> sorted_rows;
  std::vector<std::uint64_t> sorted_degrees;
  for (auto i : order_idx) {
    sorted_rows.push_back(std::move(t.rows[i]));
    sorted_degrees.push_back(t.degrees[i]);
  }
  t.rows = std::move(sorted_rows);
  t.degrees = std::move(sorted_degrees);
  return t;
}

bool orthogonality_holds(const ModPCharacterTable& t) {
  const ModP p = t.prime;
  const std::size_t r = t.class_count();
  const std::size_t n = t.group->order();
  if (t.rows.size() != r) return false;
  // Rows: sum_c |C| chi(c) psi(c^-1) = |G| delta.
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      ModP acc = 0;
      for (std::size_t c = 0; c < r; ++c)
        acc = (acc + (t.class_sizes[c] % p) * t.rows[a][c] % p * t.rows[b][t.inverse_class[c]]) % p;
      if (acc != (a == b ? n % p : 0)) return false;
    }
  // Columns: sum_chi chi(g) chi(h^-1) = |G|/|C(g)| delta.
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = 0; d < r; ++d) {
      ModP acc = 0;
      for (std::size_t a = 0; a < r; ++a) acc = (acc + t.rows[a][c] * t.rows[a][t.inverse_class[d]]) % p;
      if (acc != (c == d ? (n / t.class_sizes[c]) % p : 0)) return false;
    }
  return true;
}

ClassPermutation class_permutation(const ModPCharacterTable& t, const Automorphism& phi) {
  ClassPermutation cp;
  for (ElemId rep : t.representatives) cp.perm.push_back(t.classes.class_of[phi(rep)]);
  return cp;
}

std::size_t fixed_character_count(const ModPCharacterTable& t, const ClassPermutation& cp) {
  std::size_t count = 0;
  for (const auto& row : t.rows) {
    bool fixed = true;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[cp.perm[c]] != row[c]) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

TbftResult verify_tbft_finite(const Automorphism& phi, const ModPCharacterTable& table) {
  TbftResult r;
  r.reidemeister = reidemeister_number(phi);
  r.fixed_characters = fixed_character_count(table, class_permutation(table, phi));
  r.equal = r.reidemeister == r.fixed_characters;
  return r;
}

TbftResult verify_tbft_finite(const Automorphism& phi, const CharacterOptions& options) {
  return verify_tbft_finite(phi, character_table(phi.group(), options));
}

}  // namespace reid
