#include "reid/commands.hpp"

#include <algorithm>

#include "reid/abelian.hpp"
#include "reid/error.hpp"
#include "reid/lattice.hpp"
#include "reid/pipeline.hpp"
#include "reid/twisted.hpp"

namespace reid {

namespace {

enum class SpecKind { Perm, Abelian, Prufer };

SpecKind kind_of(const Json& spec) {
  if (!spec.is_object()) throw Error(ErrorKind::SpecParseError, "a spec is a JSON object");
  if (spec.contains("prufer")) return SpecKind::Prufer;
  if (spec.contains("kind") && spec.at("kind").is_string()) {
    const auto k = spec.at("kind").get<std::string>();
    if (k == "abelian") return SpecKind::Abelian;
    if (k == "prufer") return SpecKind::Prufer;
    if (k == "perm") return SpecKind::Perm;
    throw Error(ErrorKind::SpecParseError, "unknown spec kind \"" + k + "\"");
  }
  if (spec.contains("name")) return SpecKind::Perm;
  throw Error(ErrorKind::SpecParseError, "a spec needs a \"kind\"");
}

Automorphism spec_automorphism(const GroupPtr& g, const Json& spec) {
  return spec.contains("automorphism") ? automorphism_from_json(g, spec.at("automorphism"))
                                       : Automorphism::identity(g);
}

Json fixed_report(const QuasicyclicFixedReport& r) {
  Json counts = Json::array();
  for (auto [level, count] : r.truncation_counts) counts.push_back({{"level", level}, {"count", count}});
  return Json{{"det_one_minus", to_json(r.det_one_minus)},
              {"R", to_json(r.reidemeister)},
              {"fixed", to_json(r.fixed)},
              {"stable_level", r.stable_level},
              {"truncation", counts},
              {"truncation_consistent", r.truncation_consistent},
              {"formula_matches", r.formula_matches},
              {"surjectivity_checked", r.surjectivity_checked}};
}

bool fixed_report_ok(const QuasicyclicFixedReport& r) {
  return r.truncation_consistent && r.formula_matches && (!r.reidemeister.is_finite() || r.surjectivity_checked);
}

Json torsion_json(const TorsionDecomposition& t) {
  Json parts = Json::array();
  for (const auto& p : t.parts) parts.push_back({{"prime", to_json(p.prime)}, {"exponents", p.exponents}});
  return Json{{"free_rank", t.free_rank}, {"parts", parts}};
}

}  // namespace

Json to_json(const ModPCharacterTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) rows.push_back(row);
  return Json{{"order", table.group->order()},
              {"prime", table.prime},
              {"class_sizes", table.class_sizes},
              {"representatives", table.representatives},
              {"degrees", table.degrees},
              {"rows", rows}};
}

CommandOutput cmd_info(const Json& spec, const CommandOptions& options) {
  CommandOutput out;
  switch (kind_of(spec)) {
    case SpecKind::Perm: {
      GroupPtr g = group_from_json(spec, options.group);
      DerivedSeries series = derived_series(g);
      out.result["order"] = g->order();
      out.result["classes"] = conjugacy_classes(*g).size();
      if (series.derived_length) out.result["derived_length"] = *series.derived_length;
      out.result["soluble"] = series.soluble;
      out.result["abelian"] = g->is_abelian();
      out.result["exponent"] = g->exponent();
      if (g->order() <= options.lattice.rank_order_cap) out.result["rank"] = rank(g, options.lattice);
      break;
    }
    case SpecKind::Abelian: {
      LatticeAbelianEndo e = abelian_from_json(spec);
      out.result["shape"] = to_json(e.group().shape());
      out.result["torsion"] = torsion_json(torsion_decompose(e.group()));
      out.result["automorphism"] = e.is_automorphism();
      break;
    }
    case SpecKind::Prufer: {
      QuasicyclicEndo q = prufer_from_json(spec);
      out.result = Json{{"p", q.p}, {"d", q.d}, {"automorphism", q.is_automorphism()}};
      break;
    }
  }
  return out;
}

CommandOutput cmd_twisted(const Json& spec, const CommandOptions& options) {
  CommandOutput out;
  switch (kind_of(spec)) {
    case SpecKind::Perm: {
      GroupPtr g = group_from_json(spec, options.group);
      Automorphism phi = spec_automorphism(g, spec);
      TwistedPartition classes = reidemeister_classes(phi);
      std::vector<std::size_t> sizes;
      for (const auto& c : classes.partition.classes) sizes.push_back(c.size());
      const std::size_t oracle = semidirect_coset_oracle(phi, options.group);
      TbftResult tbft = verify_tbft_finite(phi, options.characters);
      JabaraResult jab = jabara_check(phi);
      const bool agrees = oracle == classes.reidemeister_number();
      out.result = Json{{"R", classes.reidemeister_number()},
                        {"fixed", tbft.fixed_characters},
                        {"tbft", tbft.equal},
                        {"class_sizes", sizes},
                        {"fixed_subgroup_order", fixed_subgroup(phi).order()},
                        {"oracle", oracle},
                        {"oracle_agrees", agrees},
                        {"jabara", jab.holds}};
      out.exit_code = agrees && tbft.equal && jab.holds ? kExitPass : kExitLemmaFailure;
      break;
    }
    case SpecKind::Abelian: {
      LatticeAbelianEndo e = abelian_from_json(spec);
      Count r = reidemeister_abelian(e);
      out.result["R"] = to_json(r);
      out.result["fixed"] = to_json(fixed_abelian(e));
      bool ok = fin_fix_check(e).pass;
      if (r.is_finite()) {
        AbelianWitness w = tbft_witness_abelian(e);
        out.result["witness_order"] = to_json(w.order);
        out.result["bijection"] = w.bijection_ok;
        ok = ok && w.bijection_ok && w.order == r.value();
      }
      out.exit_code = ok ? kExitPass : kExitLemmaFailure;
      break;
    }
    case SpecKind::Prufer: {
      QuasicyclicFixedReport r = quasicyclic_fixed(prufer_from_json(spec), options.quasicyclic);
      out.result = Json{{"R", to_json(r.reidemeister)}, {"fixed", to_json(r.fixed)}};
      out.exit_code = fixed_report_ok(r) ? kExitPass : kExitLemmaFailure;
      break;
    }
  }
  return out;
}

CommandOutput cmd_chartable(const Json& spec, const CommandOptions& options) {
  if (kind_of(spec) != SpecKind::Perm) throw Error(ErrorKind::SpecParseError, "chartable needs a permutation group spec");
  GroupPtr g = group_from_json(spec, options.group);
  ModPCharacterTable table = character_table(g, options.characters);
  CommandOutput out;
  out.result = to_json(table);
  const bool ortho = orthogonality_holds(table);
  out.result["orthogonality"] = ortho;
  if (spec.contains("automorphism")) {
    Automorphism phi = spec_automorphism(g, spec);
    ClassPermutation cp = class_permutation(table, phi);
    out.result["class_permutation"] = cp.perm;
    out.result["fixed_characters"] = fixed_character_count(table, cp);
  }
  out.exit_code = ortho ? kExitPass : kExitLemmaFailure;
  return out;
}

CommandOutput cmd_abelian(const Json& spec, const CommandOptions&) {
  if (kind_of(spec) != SpecKind::Abelian) throw Error(ErrorKind::SpecParseError, "abelian needs an abelian spec");
  LatticeAbelianEndo e = abelian_from_json(spec);
  CommandOutput out;
  Count r = reidemeister_abelian(e);
  FinFixReport fin = fin_fix_check(e);
  FixedOnTorsion tor = check_fixed_on_torsion(e);
  bool ok = fin.pass && (!tor.applies || tor.holds);

  out.result["shape"] = to_json(e.group().shape());
  out.result["torsion"] = torsion_json(torsion_decompose(e.group()));
  out.result["automorphism"] = e.is_automorphism();
  out.result["R"] = to_json(r);
  out.result["fixed"] = to_json(fixed_abelian(e));
  out.result["fin_fix"] = fin.pass;
  out.result["fixed_on_torsion"] = tor.applies ? Json(tor.holds) : Json(nullptr);
  if (r.is_finite()) {
    AbelianWitness w = tbft_witness_abelian(e);
    out.result["witness"] = Json{{"order", to_json(w.order)},
                                 {"quotient", to_json(w.quotient.shape())},
                                 {"induced_is_identity", w.induced_is_identity},
                                 {"singleton_classes", w.singleton_classes},
                                 {"bijection", w.bijection_ok}};
    ok = ok && w.bijection_ok && w.order == r.value();
  } else {
    out.result["witness"] = nullptr;
  }
  out.exit_code = ok ? kExitPass : kExitLemmaFailure;
  return out;
}

CommandOutput cmd_prufer(const Json& spec, const CommandOptions& options) {
  if (kind_of(spec) != SpecKind::Prufer) throw Error(ErrorKind::SpecParseError, "prufer needs a prufer spec");
  QuasicyclicEndo q = prufer_from_json(spec);
  QuasicyclicFixedReport r = quasicyclic_fixed(q, options.quasicyclic);
  CommandOutput out;
  out.result = fixed_report(r);
  out.result["automorphism"] = q.is_automorphism();
  bool ok = fixed_report_ok(r);
  const Json& body = spec.contains("prufer") ? spec.at("prufer") : spec;
  if (body.contains("subgroup")) {
    QuasicyclicQuotientReport s =
        quasicyclic_quotient(q.p, q.d, quasicyclic_subgroup_from_json(body.at("subgroup"), q.d), options.quasicyclic);
    out.result["subgroup"] = Json{{"finite", s.finite},
                                  {"order", s.finite ? to_json(s.order) : Json(nullptr)},
                                  {"quotient_dimension", s.quotient_dimension},
                                  {"dichotomy", s.dichotomy_ok},
                                  {"structure_checked", s.structure_checked}};
    ok = ok && s.dichotomy_ok && (s.finite || s.structure_checked);
  }
  out.exit_code = ok ? kExitPass : kExitLemmaFailure;
  return out;
}

CommandOutput cmd_corpus(const Json& config_json, const CommandOptions& options) {
  CorpusConfig config = parse_corpus_config(config_json);
  if (options.seed) config.seed = *options.seed;
  if (!config_json.contains("caps")) {
    config.group_options = options.group;
    config.character_options = options.characters;
    config.lattice_options = options.lattice;
  }
  auto reports = run_corpus(config);
  CommandOutput out;
  out.result = to_json(reports);
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  out.exit_code = all ? kExitPass : kExitLemmaFailure;
  return out;
}

}  // namespace reid
