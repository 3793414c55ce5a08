#include "reid/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "reid/error.hpp"

namespace reid {

namespace {

IntMatrix empty_columns(std::size_t k) { return IntMatrix(k, 0); }

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

std::vector<std::uint32_t> union_find_classes(std::size_t n,
                                              const std::vector<std::vector<std::size_t>>& moves,
                                              std::size_t* count) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& move : moves)
    for (std::uint32_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(static_cast<std::uint32_t>(move[i]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::uint32_t> class_of(n);
  std::map<std::uint32_t, std::uint32_t> label;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto r = find(i);
    auto it = label.try_emplace(r, static_cast<std::uint32_t>(label.size())).first;
    class_of[i] = it->second;
  }
  *count = label.size();
  return class_of;
}

// Adjugate-based solve of A y = v for square nonsingular A; independent of Smith forms.
std::optional<IntVector> cramer_solve(const IntMatrix& a, const IntVector& v) {
  const std::size_t k = a.rows();
  BigInt det = determinant(a);
  if (det == 0) return std::nullopt;
  IntVector y(k);
  for (std::size_t i = 0; i < k; ++i) {
    IntMatrix replaced = a;
    for (std::size_t r = 0; r < k; ++r) replaced(r, i) = v[r];
    BigInt num = determinant(replaced);
    if (num % det != 0) return std::nullopt;
    y[i] = num / det;
  }
  return y;
}

}  // namespace

std::string Count::to_string() const { return infinite_ ? "INFINITE" : value_.str(); }

Count AbelianShape::order() const {
  if (free_rank > 0) return Count::infinite();
  BigInt n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

AbelianShape quotient_shape(std::size_t k, const IntMatrix& sub) {
  SnfResult snf = smith_normal_form(sub);
  AbelianShape shape;
  shape.free_rank = k - snf.rank;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) > 1) shape.invariant_factors.push_back(snf.D(i, i));
  return shape;
}

LatticeAbelianGroup::LatticeAbelianGroup(std::size_t ambient_rank, IntMatrix relations)
    : rank_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.rows() != rank_) {
    if (relations_.rows() == 0 && relations_.cols() == 0)
      relations_ = empty_columns(rank_);
    else
      throw Error(ErrorKind::IllFormedEndo, "relation matrix must have ambient_rank rows");
  }
  snf_ = smith_normal_form(relations_);
  shape_.free_rank = rank_ - snf_.rank;
  for (std::size_t i = 0; i < snf_.rank; ++i)
    if (snf_.D(i, i) > 1) shape_.invariant_factors.push_back(snf_.D(i, i));
}

LatticeAbelianGroup LatticeAbelianGroup::free(std::size_t rank) {
  return LatticeAbelianGroup(rank, empty_columns(rank));
}

LatticeAbelianGroup LatticeAbelianGroup::cyclic_sum(const std::vector<BigInt>& orders) {
  return LatticeAbelianGroup(orders.size(), IntMatrix::diagonal(orders));
}

bool LatticeAbelianGroup::is_relation(const IntVector& v) const {
  return solve_integer(snf_, v).has_value();
}

LatticeAbelianEndo::LatticeAbelianEndo(LatticeAbelianGroup group, IntMatrix matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  const std::size_t k = group_.ambient_rank();
  if (matrix_.rows() != k || matrix_.cols() != k)
    throw Error(ErrorKind::IllFormedEndo, "endomorphism matrix must be ambient_rank square");
  const IntMatrix& l = group_.relations();
  for (std::size_t c = 0; c < l.cols(); ++c)
    if (!group_.is_relation(matrix_ * l.column(c)))
      throw Error(ErrorKind::IllFormedEndo, "matrix does not preserve the relation lattice");
  automorphism_ = quotient_shape(k, matrix_.hconcat(l)).is_trivial();
}

IntMatrix LatticeAbelianEndo::one_minus() const {
  return IntMatrix::identity(matrix_.rows()) - matrix_;
}

Count reidemeister_abelian(const LatticeAbelianEndo& e) {
  const std::size_t k = e.group().ambient_rank();
  return quotient_shape(k, e.one_minus().hconcat(e.group().relations())).order();
}

AbelianShape fixed_abelian(const LatticeAbelianEndo& e) {
  const std::size_t k = e.group().ambient_rank();
  const IntMatrix& l = e.group().relations();
  const std::size_t m = l.cols();

  // Kernel of (x, y) -> (1 - M) x - L y, projected to x, is the preimage P of Ker.
  IntMatrix w = e.one_minus().hconcat(IntMatrix(k, m) - l);
  SnfResult ws = smith_normal_form(w);
  std::vector<IntVector> gens;
  for (std::size_t i = ws.rank; i < k + m; ++i) {
    IntVector x(k);
    for (std::size_t r = 0; r < k; ++r) x[r] = ws.V(r, i);
    gens.push_back(std::move(x));
  }
  if (gens.empty()) return {};
  IntMatrix pg(k, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t r = 0; r < k; ++r) pg(r, c) = gens[c][r];

  // Coordinates of L in a basis of P.
  SnfResult ps = smith_normal_form(pg);
  IntMatrix ul = ps.U * l;
  IntMatrix coords(ps.rank, m);
  for (std::size_t i = 0; i < ps.rank; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (ul(i, j) % ps.D(i, i) != 0)
        throw Error(ErrorKind::IllFormedEndo, "relation lattice not contained in fixed preimage");
      coords(i, j) = ul(i, j) / ps.D(i, i);
    }
  return quotient_shape(ps.rank, coords);
}

TorsionDecomposition torsion_decompose(const AbelianShape& shape) {
  std::map<BigInt, std::vector<unsigned>> by_prime;
  for (BigInt n : shape.invariant_factors) {
    for (BigInt p = 2; p * p <= n; ++p) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) by_prime[p].push_back(e);
    }
    if (n > 1) by_prime[n].push_back(1);
  }
  TorsionDecomposition out;
  out.free_rank = shape.free_rank;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.rbegin(), exps.rend());
    out.parts.push_back({p, exps});
  }
  return out;
}

TorsionDecomposition torsion_decompose(const LatticeAbelianGroup& a) {
  return torsion_decompose(a.shape());
}

FiniteAbelianModel::FiniteAbelianModel(const LatticeAbelianGroup& group, std::size_t cap)
    : ambient_rank_(group.ambient_rank()), u_(group.snf().U), u_inv_(group.snf().U_inv) {
  if (!group.is_finite()) throw Error(ErrorKind::CapExceeded, "group is infinite");
  BigInt order = 1;
  for (std::size_t i = 0; i < group.snf().rank; ++i) {
    const BigInt& d = group.snf().D(i, i);
    if (d == 1) continue;
    order *= d;
    if (order > cap) throw Error(ErrorKind::CapExceeded, "group too large to enumerate");
    moduli_.push_back(static_cast<std::size_t>(d));
    coords_.push_back(i);
  }
  order_ = static_cast<std::size_t>(order);
}

std::size_t FiniteAbelianModel::index_of(const IntVector& x) const {
  IntVector y = u_ * x;
  std::size_t index = 0;
  for (std::size_t t = moduli_.size(); t-- > 0;)
    index = index * moduli_[t] + static_cast<std::size_t>(floor_mod(y[coords_[t]], moduli_[t]));
  return index;
}

IntVector FiniteAbelianModel::lift(std::size_t index) const {
  IntVector y(ambient_rank_);
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    y[coords_[t]] = index % moduli_[t];
    index /= moduli_[t];
  }
  return u_inv_ * y;
}

std::vector<std::size_t> FiniteAbelianModel::apply(const IntMatrix& m) const {
  std::vector<std::size_t> out(order_);
  for (std::size_t i = 0; i < order_; ++i) out[i] = index_of(m * lift(i));
  return out;
}

std::size_t FiniteAbelianModel::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, scale = 1;
  for (std::size_t m : moduli_) {
    out += ((a % m + b % m) % m) * scale;
    scale *= m;
    a /= m;
    b /= m;
  }
  return out;
}

std::size_t FiniteAbelianModel::negate(std::size_t a) const {
  std::size_t out = 0, scale = 1;
  for (std::size_t m : moduli_) {
    out += ((m - a % m) % m) * scale;
    scale *= m;
    a /= m;
  }
  return out;
}

std::size_t twisted_orbit_count(const FiniteAbelianModel& model, const IntMatrix& m) {
  const std::size_t k = m.rows();
  IntMatrix one_minus = IntMatrix::identity(k) - m;
  std::vector<std::vector<std::size_t>> moves;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t delta = model.index_of(one_minus.column(j));
    std::vector<std::size_t> move(model.order());
    for (std::size_t a = 0; a < model.order(); ++a) move[a] = model.add(a, delta);
    moves.push_back(std::move(move));
  }
  std::size_t count = 0;
  union_find_classes(model.order(), moves, &count);
  return count;
}

AbelianWitness tbft_witness_abelian(const LatticeAbelianEndo& e, const WitnessOptions& options) {
  Count r = reidemeister_abelian(e);
  if (!r.is_finite()) throw Error(ErrorKind::InfiniteReidemeister, "R(phi) is infinite");
  const std::size_t k = e.group().ambient_rank();
  const IntMatrix one_minus = e.one_minus();
  const IntMatrix image_lattice = one_minus.hconcat(e.group().relations());

  AbelianWitness w{LatticeAbelianGroup(k, image_lattice), e.matrix(), r.value(), {}, false, false, false};
  FiniteAbelianModel f(w.quotient, options.enumeration_cap);
  for (std::size_t i = 0; i < f.order(); ++i) w.coset_reps.push_back(f.lift(i));

  std::vector<std::size_t> induced = f.apply(e.matrix());
  w.induced_is_identity = true;
  for (std::size_t i = 0; i < f.order(); ++i)
    if (induced[i] != i) w.induced_is_identity = false;
  w.singleton_classes = twisted_orbit_count(f, e.matrix()) == f.order();

  bool ok = BigInt(f.order()) == r.value();
  if (e.group().is_finite()) {
    // Pull back every element of A and compare Reidemeister classes with fibers.
    FiniteAbelianModel a(e.group(), options.enumeration_cap);
    std::vector<std::vector<std::size_t>> moves;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t delta = a.index_of(one_minus.column(j));
      std::vector<std::size_t> move(a.order());
      for (std::size_t x = 0; x < a.order(); ++x) move[x] = a.add(x, delta);
      moves.push_back(std::move(move));
    }
    std::size_t classes = 0;
    auto class_of = union_find_classes(a.order(), moves, &classes);
    std::vector<std::int64_t> fiber_of_class(classes, -1), class_of_fiber(f.order(), -1);
    for (std::size_t x = 0; x < a.order() && ok; ++x) {
      auto fx = static_cast<std::int64_t>(f.index_of(a.lift(x)));
      auto cx = static_cast<std::int64_t>(class_of[x]);
      if (fiber_of_class[cx] < 0) fiber_of_class[cx] = fx;
      if (class_of_fiber[fx] < 0) class_of_fiber[fx] = cx;
      if (fiber_of_class[cx] != fx || class_of_fiber[fx] != cx) ok = false;
    }
    ok = ok && classes == f.order() &&
         std::none_of(class_of_fiber.begin(), class_of_fiber.end(), [](auto c) { return c < 0; });
  } else {
    // Infinite A: every point of a box is twisted-conjugate to the lift of its
    // fiber, and distinct lifts are not twisted-conjugate.
    const bool square = e.group().relations().cols() == 0 && determinant(one_minus) != 0;
    SnfResult image_snf = smith_normal_form(image_lattice);
    auto in_image = [&](const IntVector& v) {
      return square ? cramer_solve(one_minus, v).has_value() : solve_integer(image_snf, v).has_value();
    };
    auto diff = [](const IntVector& a, const IntVector& b) {
      IntVector d(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
      return d;
    };
    for (std::size_t i = 0; i < w.coset_reps.size() && ok; ++i)
      for (std::size_t j = i + 1; j < w.coset_reps.size(); ++j)
        if (in_image(diff(w.coset_reps[i], w.coset_reps[j]))) {
          ok = false;
          break;
        }
    const long long b = options.box_radius;
    IntVector x(k, BigInt(-b));
    while (ok) {
      if (!in_image(diff(x, w.coset_reps[f.index_of(x)]))) ok = false;
      std::size_t t = 0;
      while (t < k && x[t] == b) x[t++] = -b;
      if (t == k) break;
      x[t] += 1;
    }
  }
  w.bijection_ok = ok && w.induced_is_identity && w.singleton_classes;
  return w;
}

FixedOnTorsion check_fixed_on_torsion(const LatticeAbelianEndo& e) {
  const LatticeAbelianGroup& a = e.group();
  const std::size_t k = a.ambient_rank();
  const std::size_t t = a.snf().rank;
  IntMatrix m = a.snf().U * e.matrix() * a.snf().U_inv;

  FixedOnTorsion out;
  IntMatrix free_part(k - t, k - t);
  for (std::size_t i = t; i < k; ++i)
    for (std::size_t j = t; j < k; ++j) free_part(i - t, j - t) = (i == j ? 1 : 0) - m(i, j);
  out.det_free = determinant(free_part);
  out.applies = out.det_free != 0;
  out.fixed_total = fixed_abelian(e);

  std::vector<BigInt> orders;
  IntMatrix torsion_matrix(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    orders.push_back(a.snf().D(i, i));
    for (std::size_t j = 0; j < t; ++j) torsion_matrix(i, j) = m(i, j);
  }
  LatticeAbelianEndo on_torsion(LatticeAbelianGroup::cyclic_sum(orders), torsion_matrix);
  out.fixed_torsion = fixed_abelian(on_torsion);
  out.holds = !out.applies || out.fixed_total == out.fixed_torsion;
  return out;
}

FinFixReport fin_fix_check(const LatticeAbelianEndo& e) {
  FinFixReport r;
  r.reidemeister = reidemeister_abelian(e);
  r.fixed = fixed_abelian(e).order();
  r.pass = !r.reidemeister.is_finite() || r.fixed.is_finite();
  return r;
}

}  // namespace reid
