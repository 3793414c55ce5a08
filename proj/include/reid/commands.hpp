#pragma once

#include <cstdint>
#include <optional>

#include "reid/characters.hpp"
#include "reid/corpus.hpp"
#include "reid/group.hpp"
#include "reid/quasicyclic.hpp"
#include "reid/spec_io.hpp"

namespace reid {

enum ExitCode : int { kExitPass = 0, kExitLemmaFailure = 1, kExitInputError = 2 };

struct CommandOptions {
  GroupOptions group;
  CharacterOptions characters;
  LatticeOptions lattice;
  QuasicyclicOptions quasicyclic;
  std::optional<std::uint64_t> seed;  // overrides the corpus sampling seed
};

struct CommandOutput {
  Json result;
  int exit_code = kExitPass;
};

/// Input errors (malformed specs, unknown constructors, cap overflows) raise
/// reid::Error; the caller maps them to kExitInputError.
CommandOutput cmd_info(const Json& spec, const CommandOptions& options = {});
CommandOutput cmd_twisted(const Json& spec, const CommandOptions& options = {});
CommandOutput cmd_chartable(const Json& spec, const CommandOptions& options = {});
CommandOutput cmd_abelian(const Json& spec, const CommandOptions& options = {});
CommandOutput cmd_prufer(const Json& spec, const CommandOptions& options = {});
CommandOutput cmd_corpus(const Json& config, const CommandOptions& options = {});

Json to_json(const ModPCharacterTable& table);

}  // namespace reid
