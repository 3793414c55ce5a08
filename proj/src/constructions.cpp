#include "reid/constructions.hpp"

#include "reid/error.hpp"

namespace reid::groups {

namespace {

Perm cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Perm(std::move(images));
}

Perm transposition(std::size_t degree, std::size_t a, std::size_t b) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::swap(images[a], images[b]);
  return Perm(std::move(images));
}

}  // namespace

GroupPtr trivial() { return generate_group(1, {}); }

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ConfigError, "cyclic group of order 0");
  if (n == 1) return trivial();
  return generate_group(n, {cycle_on(n, 0, n)});
}

GroupPtr dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorKind::ConfigError, "dihedral order must be even and positive");
  std::size_t n = order / 2;
  if (n == 1) return cyclic(2);
  if (n == 2) return abelian({2, 2});
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return generate_group(n, {cycle_on(n, 0, n), Perm(std::move(reflection))});
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ConfigError, "symmetric group on 0 points");
  if (n == 1) return trivial();
  if (n == 2) return cyclic(2);
  return generate_group(n, {transposition(n, 0, 1), cycle_on(n, 0, n)});
}

GroupPtr alternating(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ConfigError, "alternating group on 0 points");
  if (n <= 2) return generate_group(n, {});
  // 3-cycles (0 1 k) generate A_n.
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
    images[0] = 1;
    images[1] = static_cast<Point>(k);
    images[k] = 0;
    gens.emplace_back(std::move(images));
  }
  return generate_group(n, std::move(gens));
}

GroupPtr dicyclic(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::ConfigError, "dicyclic parameter must be positive");
  // Element a^i b^j is encoded as i + 2m*j.
  const std::size_t n2 = 2 * m;
  auto mul = [=](std::size_t x, std::size_t y) {
    std::size_t i = x % n2, j = x / n2, k = y % n2, l = y / n2;
    if (j == 0) return (i + k) % n2 + n2 * l;
    std::size_t e = (i + n2 - k) % n2;  // a^i b a^k = a^{i-k} b
    if (l == 0) return e + n2;
    return (e + m) % n2;  // b^2 = a^m
  };
  return regular(4 * m, mul, {1, n2});
}

GroupPtr quaternion(std::size_t order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw Error(ErrorKind::ConfigError, "quaternion order must be a power of two >= 8");
  return dicyclic(order / 4);
}

GroupPtr heisenberg(std::size_t p) {
  if (p < 2) throw Error(ErrorKind::ConfigError, "heisenberg modulus must be >= 2");
  // (a, b, c) encoded as a + p*b + p^2*c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  auto mul = [=](std::size_t x, std::size_t y) {
    std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
    std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
  };
  return regular(p * p * p, mul, {1, p});
}

GroupPtr abelian(const std::vector<std::size_t>& orders) {
  GroupPtr g = trivial();
  bool first = true;
  for (std::size_t n : orders) {
    if (n == 0) throw Error(ErrorKind::ConfigError, "cyclic factor of order 0");
    if (n == 1) continue;
    g = first ? cyclic(n) : direct_product(g, cyclic(n));
    first = false;
  }
  return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t da = a->degree(), db = b->degree();
  auto embed = [&](const Perm& p, std::size_t offset) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da + db; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < p.degree(); ++i)
      images[offset + i] = static_cast<Point>(offset + p(static_cast<Point>(i)));
    return Perm(std::move(images));
  };
  std::vector<Perm> gens;
  for (const Perm& s : a->generators()) gens.push_back(embed(s, 0));
  for (const Perm& s : b->generators()) gens.push_back(embed(s, da));
  return generate_group(da + db, std::move(gens));
}

GroupPtr regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                 const std::vector<std::size_t>& generators) {
  std::vector<Perm> gens;
  for (std::size_t x : generators) {
    std::vector<Point> images(n);
    for (std::size_t y = 0; y < n; ++y) images[y] = static_cast<Point>(mul(x, y));
    gens.emplace_back(std::move(images));
  }
  return generate_group(n, std::move(gens));
}

}  // namespace reid::groups
