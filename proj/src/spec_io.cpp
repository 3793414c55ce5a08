#include "reid/spec_io.hpp"

#include <fstream>
#include <limits>

#include "reid/constructions.hpp"
#include "reid/error.hpp"

namespace reid {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::SpecParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::size_t positive(const Json& j, const char* what) {
  long long v = integer(j, what);
  if (v < 1) parse_error(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

BigInt big_integer(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  parse_error("matrix entries must be integers");
}

std::vector<std::size_t> size_args(const Json& j, std::size_t count, const std::string& name) {
  const Json& args = j.contains("args") ? j.at("args") : Json::array();
  if (!args.is_array() || (count != 0 && args.size() != count))
    throw Error(ErrorKind::ConfigError, "constructor \"" + name + "\" expects " + std::to_string(count) + " argument(s)");
  std::vector<std::size_t> out;
  for (const auto& a : args) out.push_back(positive(a, "constructor argument"));
  return out;
}

}  // namespace

Json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

Json to_json(const Count& c) { return c.is_finite() ? to_json(c.value()) : Json("INFINITE"); }

Json to_json(const AbelianShape& s) {
  Json factors = Json::array();
  for (const auto& d : s.invariant_factors) factors.push_back(to_json(d));
  return Json{{"free_rank", s.free_rank}, {"invariant_factors", factors}, {"order", to_json(s.order())}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

Perm perm_from_json(const Json& j, std::size_t degree) {
  if (j.is_string()) return Perm::from_cycles(j.get<std::string>(), degree);
  if (!j.is_array()) parse_error("a permutation is a cycle string or an image array");
  std::vector<Point> images;
  for (const auto& x : j) {
    long long v = integer(x, "image");
    if (v < 0 || static_cast<std::size_t>(v) >= degree) parse_error("image point out of range");
    images.push_back(static_cast<Point>(v));
  }
  if (images.size() != degree) parse_error("image array length differs from the degree");
  try {
    return Perm(std::move(images));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

IntMatrix matrix_from_json(const Json& j, std::size_t expected_cols) {
  if (!j.is_array()) parse_error("a matrix is an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != expected_cols) parse_error("matrix rows must have equal length");
    std::vector<BigInt> r;
    for (const auto& x : row) r.push_back(big_integer(x));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows, expected_cols);
}

namespace {

GroupPtr build_group(const Json& j, const GroupOptions& options);

}  // namespace

GroupPtr group_from_json(const Json& j, const GroupOptions& options) {
  GroupPtr g = build_group(j, options);
  // Named constructors build their groups directly, so the cap is enforced here too.
  if (g->order() > options.closure_cap)
    throw Error(ErrorKind::ClosureCapExceeded,
                "group of order " + std::to_string(g->order()) + " exceeds cap of " +
                    std::to_string(options.closure_cap));
  return g;
}

namespace {

GroupPtr build_group(const Json& j, const GroupOptions& options) {
  if (!j.is_object()) parse_error("a group description is an object");
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) parse_error("\"name\" must be a string");
    name = j.at("name").get<std::string>();
  } else if (j.contains("kind")) {
    if (!j.at("kind").is_string()) parse_error("\"kind\" must be a string");
    name = j.at("kind").get<std::string>();
  } else {
    parse_error("a group description needs a \"name\" or \"kind\"");
  }

  if (name == "perm") {
    const std::size_t degree = positive(field(j, "degree"), "degree");
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) parse_error("\"generators\" must be an array");
    std::vector<Perm> perms;
    for (const auto& g : gens) perms.push_back(perm_from_json(g, degree));
    return generate_group(degree, std::move(perms), options);
  }
  if (name == "direct_product") {
    const Json& factors = field(j, "factors");
    if (!factors.is_array() || factors.empty()) parse_error("\"factors\" must be a nonempty array");
    GroupPtr g = group_from_json(factors.front(), options);
    for (std::size_t i = 1; i < factors.size(); ++i) g = groups::direct_product(g, group_from_json(factors[i], options));
    return g;
  }
  if (name == "trivial") return groups::trivial();
  if (name == "abelian") return groups::abelian(size_args(j, 0, name));

  using Ctor = GroupPtr (*)(std::size_t);
  static const std::pair<const char*, Ctor> unary[] = {
      {"cyclic", groups::cyclic},       {"dihedral", groups::dihedral},   {"symmetric", groups::symmetric},
      {"alternating", groups::alternating}, {"dicyclic", groups::dicyclic}, {"quaternion", groups::quaternion},
      {"heisenberg", groups::heisenberg},
  };
  for (const auto& [ctor_name, ctor] : unary)
    if (name == ctor_name) return ctor(size_args(j, 1, name)[0]);
  throw Error(ErrorKind::ConfigError, "unknown group constructor \"" + name + "\"");
}

}  // namespace

Automorphism automorphism_from_json(const GroupPtr& g, const Json& j) {
  if (j.is_string() && j.get<std::string>() == "identity") return Automorphism::identity(g);
  if (!j.is_object()) parse_error("an automorphism is \"identity\" or an object");
  if (j.contains("inner")) return Automorphism::inner(g, g->id_of(perm_from_json(j.at("inner"), g->degree())));
  if (j.contains("map")) {
    const Json& m = j.at("map");
    if (!m.is_array()) parse_error("\"map\" must be an array");
    std::vector<ElemId> map;
    for (const auto& x : m) {
      long long v = integer(x, "map entry");
      if (v < 0) parse_error("map entries must be element ids");
      map.push_back(static_cast<ElemId>(v));
    }
    if (map.size() != g->order()) parse_error("\"map\" must list an image for every element");
    for (ElemId v : map)
      if (v >= g->order()) parse_error("map entry out of range");
    return Automorphism(g, std::move(map));
  }
  const Json& images = field(j, "images");
  if (!images.is_array() || images.size() != g->generators().size())
    parse_error("\"images\" must give one image per generator");
  std::vector<ElemId> ids;
  for (const auto& im : images) ids.push_back(g->id_of(perm_from_json(im, g->degree())));
  return automorphism_from_images(g, ids);
}

LatticeAbelianEndo abelian_from_json(const Json& j) {
  const std::size_t k = positive(field(j, "ambient_rank"), "ambient_rank");
  IntMatrix relations(k, 0);
  if (j.contains("relations")) relations = matrix_from_json(j.at("relations"), k).transpose();
  if (relations.rows() != k) relations = IntMatrix(k, 0);
  IntMatrix m = matrix_from_json(field(j, "matrix"), k);
  if (m.rows() != k) parse_error("\"matrix\" must be ambient_rank x ambient_rank");
  return LatticeAbelianEndo(LatticeAbelianGroup(k, std::move(relations)), std::move(m));
}

QuasicyclicEndo prufer_from_json(const Json& j) {
  const Json& body = j.contains("prufer") ? j.at("prufer") : j;
  QuasicyclicEndo q;
  q.p = static_cast<unsigned>(positive(field(body, "p"), "p"));
  q.d = positive(field(body, "d"), "d");
  q.matrix = matrix_from_json(field(body, "matrix"), q.d);
  if (q.matrix.rows() != q.d) parse_error("\"matrix\" must be d x d");
  q.validate();
  return q;
}

QuasicyclicSubgroup quasicyclic_subgroup_from_json(const Json& j, std::size_t d) {
  if (j.contains("image")) return DivisibleImageForm{matrix_from_json(j.at("image"), j.at("image").empty() ? 0 : j.at("image").front().size())};
  if (!j.contains("generators")) throw Error(ErrorKind::UnsupportedSubgroupForm, "expected \"generators\" or \"image\"");
  FiniteGeneratorForm form;
  for (const auto& g : j.at("generators")) {
    QuasicyclicElement e;
    for (const auto& x : field(g, "numerators")) e.numerators.push_back(integer(x, "numerator"));
    e.level = static_cast<unsigned>(integer(field(g, "level"), "level"));
    if (e.numerators.size() != d) throw Error(ErrorKind::UnsupportedSubgroupForm, "generator has wrong dimension");
    form.generators.push_back(std::move(e));
  }
  return form;
}

}  // namespace reid
