#include "reid/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "reid/error.hpp"
#include "reid/pipeline.hpp"
#include "reid/twisted.hpp"

namespace reid {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorKind::ConfigError, what); }

void validate_group(const Json& j) {
  static const std::set<std::string> known = {"perm",        "direct_product", "trivial",  "abelian",
                                              "cyclic",      "dihedral",       "symmetric", "alternating",
                                              "dicyclic",    "quaternion",     "heisenberg"};
  if (!j.is_object()) config_error("a group entry must be an object");
  const char* key = j.contains("name") ? "name" : "kind";
  if (!j.contains(key) || !j.at(key).is_string()) config_error("a group entry needs a \"name\"");
  const auto name = j.at(key).get<std::string>();
  if (!known.count(name)) config_error("unknown group constructor \"" + name + "\"");
  if (name == "direct_product") {
    if (!j.contains("factors") || !j.at("factors").is_array()) config_error("direct_product needs \"factors\"");
    for (const auto& f : j.at("factors")) validate_group(f);
  }
}

std::size_t read_size(const Json& obj, const char* key, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    config_error(std::string("\"") + key + "\" must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

Json named(const char* name, std::vector<std::size_t> args) { return Json{{"name", name}, {"args", args}}; }

// Indices of the automorphisms to check: everything for small groups, else
// the identity plus a seeded sample.
std::vector<std::size_t> sample_indices(std::size_t total, const CorpusConfig& config, std::uint64_t group_hash,
                                        std::size_t order) {
  std::vector<std::size_t> all(total);
  for (std::size_t i = 0; i < total; ++i) all[i] = i;
  if (order <= config.all_automorphisms_up_to || total <= config.sample_size + 1) return all;
  std::mt19937_64 rng(config.seed ^ group_hash);
  // Partial Fisher-Yates over 1..total-1 with raw engine output, so the
  // sample does not depend on the standard library's distributions.
  for (std::size_t i = 0; i < config.sample_size; ++i) {
    std::size_t j = 1 + i + static_cast<std::size_t>(rng() % (total - 1 - i));
    std::swap(all[1 + i], all[j]);
  }
  std::vector<std::size_t> picked(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(config.sample_size + 1));
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<ElemId> shift_points(std::size_t order, const CorpusConfig& config) {
  std::vector<ElemId> xs;
  if (order <= config.shift_exhaustive_up_to) {
    for (std::size_t x = 0; x < order; ++x) xs.push_back(static_cast<ElemId>(x));
    return xs;
  }
  const std::size_t n = std::min(config.shift_samples, order);
  for (std::size_t s = 0; s < n; ++s) xs.push_back(static_cast<ElemId>(n == 1 ? 0 : s * (order - 1) / (n - 1)));
  return xs;
}

struct GroupContext {
  GroupPtr group;
  std::size_t class_count = 0;
  std::vector<Subgroup> normals;
  std::optional<ModPCharacterTable> table;
  bool soluble = false;
};

template <class F>
void timed(VerificationReport& report, bool enabled, F&& body) {
  auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  if (enabled)
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport group_case(const CorpusGroup& entry, const GroupContext& ctx, const CorpusConfig& config) {
  VerificationReport r;
  r.case_id = entry.id + "/group";
  r.group_order = ctx.group->order();
  r.class_count = ctx.class_count;
  timed(r, config.timings, [&] {
    const GroupPtr& g = ctx.group;
    Json inner = Json::array();
    bool inner_ok = true;
    for (const Subgroup& f : ctx.normals) {
      if (!quotient(f).group->is_abelian()) continue;
      InnerBound b = inner_bound_check(f);
      inner_ok = inner_ok && b.holds;
      inner.push_back({{"F", b.kernel_order}, {"rank", b.quotient_rank}, {"inner", b.inner_order},
                       {"bound", to_json(b.bound)}});
    }
    r.checks.emplace_back("inner_bound", inner_ok);
    r.values["inner_bound"] = inner;

    if (g->order() <= config.subgroup_count_up_to) {
      bool ok = true;
      Json counts = Json::array();
      for (const auto& row : subgroup_count_check(g, config.subgroup_count_max_n, config.lattice_options)) {
        ok = ok && row.holds;
        counts.push_back({{"n", row.n}, {"a_n", row.count}, {"bound", to_json(row.bound)}});
      }
      r.checks.emplace_back("subgroup_count", ok);
      r.values["subgroup_counts"] = counts;
    }

    SolubleProfile p = soluble_profile(Automorphism::identity(g), config.lattice_options);
    Json profile{{"rank", p.rank ? Json(*p.rank) : Json(nullptr)},
                 {"radical_order", p.radical_order},
                 {"radical_index", p.radical_index},
                 {"radical_derived_length", p.radical_derived_length}};
    r.values["profile"] = profile;
    if (ctx.table) r.checks.emplace_back("orthogonality", orthogonality_holds(*ctx.table));
  });
  return r;
}

void automorphism_checks(VerificationReport& r, const Automorphism& phi, const GroupContext& ctx,
                         const CorpusConfig& config) {
  const GroupPtr& g = ctx.group;
  r.automorphism_order = phi.order();
  const std::size_t fixed = fixed_subgroup(phi).order();
  r.fixed_order = fixed;

  const std::size_t reid = reidemeister_number(phi);
  const std::size_t oracle = semidirect_coset_oracle(phi, config.group_options);
  r.values["R"] = reid;
  r.values["oracle"] = oracle;
  r.checks.emplace_back("oracle", reid == oracle);

  if (ctx.table) {
    TbftResult t = verify_tbft_finite(phi, *ctx.table);
    r.values["fixed_characters"] = t.fixed_characters;
    r.checks.emplace_back("tbft", t.equal);
  }

  bool shift_ok = true;
  for (ElemId x : shift_points(g->order(), config)) shift_ok = shift_ok && verify_shift(phi, x);
  r.checks.emplace_back("shift", shift_ok);

  bool ext_ok = true;
  std::size_t ext_count = 0;
  for (const Subgroup& h : ctx.normals) {
    if (!is_invariant(phi, h)) continue;
    ++ext_count;
    ext_ok = ext_ok && verify_extension(phi, h).ok();
  }
  r.values["extension_subgroups"] = ext_count;
  r.checks.emplace_back("extension", ext_ok);

  JabaraResult jab = jabara_check(phi);
  r.checks.emplace_back("jabara", jab.holds);

  SigmaWitness w = sigma_witness(phi);
  r.values["sigma_degree"] = w.action_degree;
  r.values["sigma_kernel"] = w.kernel.order();
  r.checks.emplace_back("sigma", w.bijection_ok);
  r.checks.emplace_back("coset_union", class_coset_union(phi, w.kernel));

  if (ctx.soluble) {
    ReductionTrace trace = derived_reduction(phi);
    Json levels = Json::array();
    for (const auto& l : trace.levels)
      levels.push_back({{"order", l.term_order}, {"R", l.r_phi}, {"fixed_alpha", l.fixed_alpha}, {"R_next", l.r_next}});
    r.values["derived"] = levels;
    r.checks.emplace_back("derived_reduction", trace.ok());
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return !error && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

CorpusConfig parse_corpus_config(const Json& j) {
  if (!j.is_object()) config_error("corpus configuration must be a JSON object");
  CorpusConfig c;
  if (j.contains("groups")) {
    const Json& groups = j.at("groups");
    if (!groups.is_array()) config_error("\"groups\" must be an array");
    std::set<std::string> ids;
    for (const auto& entry : groups) {
      if (!entry.is_object() || !entry.contains("id") || !entry.at("id").is_string() || !entry.contains("group"))
        config_error("each corpus entry needs a string \"id\" and a \"group\"");
      CorpusGroup g;
      g.id = entry.at("id").get<std::string>();
      if (!ids.insert(g.id).second) config_error("duplicate corpus id \"" + g.id + "\"");
      g.group = entry.at("group");
      validate_group(g.group);
      if (entry.contains("automorphisms")) {
        if (!entry.at("automorphisms").is_array()) config_error("\"automorphisms\" must be an array");
        for (const auto& a : entry.at("automorphisms")) g.automorphisms.push_back(a);
      }
      c.groups.push_back(std::move(g));
    }
  }
  if (j.contains("policy")) {
    const Json& p = j.at("policy");
    c.all_automorphisms_up_to = read_size(p, "all_up_to", c.all_automorphisms_up_to);
    c.sample_size = read_size(p, "sample_size", c.sample_size);
    c.seed = read_size(p, "seed", c.seed);
  }
  if (j.contains("caps")) {
    const Json& p = j.at("caps");
    c.group_options.closure_cap = read_size(p, "closure", c.group_options.closure_cap);
    c.character_options.order_cap = read_size(p, "character_order", c.character_options.order_cap);
    c.lattice_options.max_subgroups = read_size(p, "max_subgroups", c.lattice_options.max_subgroups);
    c.lattice_options.rank_order_cap = read_size(p, "rank_order", c.lattice_options.rank_order_cap);
  }
  if (j.contains("checks")) {
    const Json& p = j.at("checks");
    c.shift_exhaustive_up_to = read_size(p, "shift_exhaustive_up_to", c.shift_exhaustive_up_to);
    c.shift_samples = read_size(p, "shift_samples", c.shift_samples);
    c.subgroup_count_up_to = read_size(p, "subgroup_count_up_to", c.subgroup_count_up_to);
    c.subgroup_count_max_n = read_size(p, "subgroup_count_max_n", c.subgroup_count_max_n);
  }
  if (j.contains("timings")) {
    if (!j.at("timings").is_boolean()) config_error("\"timings\" must be a boolean");
    c.timings = j.at("timings").get<bool>();
  }
  return c;
}

Json default_corpus_json() {
  Json groups = Json::array();
  auto add = [&](const char* id, Json g) { groups.push_back({{"id", id}, {"group", std::move(g)}}); };
  add("C1", Json{{"name", "trivial"}});
  for (std::size_t n : {2, 3, 4, 5, 6, 8}) add(("C" + std::to_string(n)).c_str(), named("cyclic", {n}));
  add("V4", named("abelian", {2, 2}));
  add("C2^3", named("abelian", {2, 2, 2}));
  add("C4xC2", named("abelian", {4, 2}));
  add("C3xC3", named("abelian", {3, 3}));
  add("C4xC4", named("abelian", {4, 4}));
  add("S3", named("symmetric", {3}));
  add("D8", named("dihedral", {8}));
  add("D10", named("dihedral", {10}));
  add("D12", named("dihedral", {12}));
  add("D16", named("dihedral", {16}));
  add("Q8", named("quaternion", {8}));
  add("Q16", named("quaternion", {16}));
  add("Q8xC2", Json{{"name", "direct_product"}, {"factors", {named("quaternion", {8}), named("cyclic", {2})}}});
  add("A4", named("alternating", {4}));
  add("S4", named("symmetric", {4}));
  add("Heis3", named("heisenberg", {3}));
  add("A5", named("alternating", {5}));
  add("S5", named("symmetric", {5}));
  add("A5xC2", Json{{"name", "direct_product"}, {"factors", {named("alternating", {5}), named("cyclic", {2})}}});
  return Json{{"groups", groups}, {"policy", {{"all_up_to", 64}, {"sample_size", 8}, {"seed", 0}}}};
}

CorpusConfig default_corpus_config() { return parse_corpus_config(default_corpus_json()); }

std::vector<VerificationReport> run_corpus(const CorpusConfig& config) {
  std::vector<VerificationReport> reports;
  for (const CorpusGroup& entry : config.groups) {
    GroupContext ctx;
    VerificationReport setup;
    setup.case_id = entry.id + "/group";
    timed(setup, false, [&] {
      ctx.group = group_from_json(entry.group, config.group_options);
      ctx.class_count = conjugacy_classes(*ctx.group).size();
      ctx.normals = normal_subgroups(ctx.group, config.lattice_options);
      ctx.soluble = derived_series(ctx.group).soluble;
      if (ctx.group->order() <= config.character_options.order_cap)
        ctx.table = character_table(ctx.group, config.character_options);
    });
    if (setup.error) {
      if (ctx.group) setup.group_order = ctx.group->order();
      reports.push_back(std::move(setup));
      continue;
    }
    reports.push_back(group_case(entry, ctx, config));

    if (!entry.automorphisms.empty()) {
      for (std::size_t k = 0; k < entry.automorphisms.size(); ++k) {
        VerificationReport r;
        r.case_id = entry.id + "/explicit" + std::to_string(k);
        r.group_order = ctx.group->order();
        r.class_count = ctx.class_count;
        timed(r, config.timings, [&] {
          automorphism_checks(r, automorphism_from_json(ctx.group, entry.automorphisms[k]), ctx, config);
        });
        reports.push_back(std::move(r));
      }
      continue;
    }

    std::vector<Automorphism> auts;
    VerificationReport search;
    search.case_id = entry.id + "/automorphisms";
    timed(search, false, [&] { auts = all_automorphisms(ctx.group); });
    if (search.error) {
      search.group_order = ctx.group->order();
      search.class_count = ctx.class_count;
      reports.push_back(std::move(search));
      continue;
    }
    for (std::size_t k : sample_indices(auts.size(), config, ctx.group->canonical_hash(), ctx.group->order())) {
      VerificationReport r;
      r.case_id = entry.id + "/aut" + std::to_string(k);
      r.group_order = ctx.group->order();
      r.class_count = ctx.class_count;
      timed(r, config.timings, [&] { automorphism_checks(r, auts[k], ctx, config); });
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["case"] = r.case_id;
  j["group"] = {{"order", r.group_order}, {"classes", r.class_count}};
  if (r.automorphism_order) j["automorphism"] = {{"order", *r.automorphism_order}, {"fixed", *r.fixed_order}};
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  if (!r.values.empty()) j["values"] = r.values;
  if (r.error) j["error"] = *r.error;
  j["passed"] = r.passed();
  if (r.millis) j["millis"] = *r.millis;
  return j;
}

Json to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace reid
