#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reid/characters.hpp"
#include "reid/lattice.hpp"
#include "reid/spec_io.hpp"

namespace reid {

struct CorpusGroup {
  std::string id;
  Json group;                      // see group_from_json
  std::vector<Json> automorphisms;  // explicit automorphisms; empty means use the sampling policy
};

struct CorpusConfig {
  std::vector<CorpusGroup> groups;
  std::size_t all_automorphisms_up_to = 64;  // larger groups get a sample
  std::size_t sample_size = 8;               // sampled automorphisms besides the identity
  std::uint64_t seed = 0;
  std::size_t shift_exhaustive_up_to = 24;   // otherwise evenly spaced x
  std::size_t shift_samples = 8;
  std::size_t subgroup_count_up_to = 64;
  std::size_t subgroup_count_max_n = 8;
  GroupOptions group_options;
  CharacterOptions character_options;
  LatticeOptions lattice_options;
  bool timings = false;  // wall-clock timings make reports nondeterministic
};

/// Throws Error(ConfigError) on schema violations and unknown constructors.
CorpusConfig parse_corpus_config(const Json& j);
/// The bundled corpus of 26 groups of order at most 120.
CorpusConfig default_corpus_config();
Json default_corpus_json();

struct VerificationReport {
  std::string case_id;
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  std::optional<std::size_t> automorphism_order;
  std::optional<std::size_t> fixed_order;
  std::vector<std::pair<std::string, bool>> checks;  // in execution order
  Json values = Json::object();
  std::optional<std::string> error;
  std::optional<double> millis;

  bool passed() const;
};

/// Runs every check on every case. Errors are recorded in the case's report.
std::vector<VerificationReport> run_corpus(const CorpusConfig& config);

Json to_json(const VerificationReport& r);
Json to_json(const std::vector<VerificationReport>& reports);

}  // namespace reid
