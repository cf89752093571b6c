#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "beltca/afo.hpp"
#include "beltca/belt.hpp"
#include "beltca/heads.hpp"
#include "beltca/neumann.hpp"
#include "beltca/pointy.hpp"
#include "beltca/relations.hpp"
#include "beltca/wreath.hpp"

namespace beltca::cli {

struct VerifyParams {
  std::size_t period = 4;          ///< P: exhaustive period bound
  std::size_t ball = 4;            ///< L: word length bound
  std::size_t n_min = 3, n_max = 8;
  std::size_t witness_period = 12;
  std::size_t samples = 1000;      ///< random tapes per sampled check
  std::size_t sample_period = 40;
  std::uint64_t seed = 1;
  std::uint64_t max_tapes = 1ull << 25;
};

/// An AFO from the config with its expected mappings (input, output tapes).
struct AfoEntry {
  AfoSpec afo;
  std::vector<std::pair<PeriodicConfig, PeriodicConfig>> expect;
};

/// A resolved config document.
struct System {
  std::string action;  ///< the "action" text, or "custom"
  GeneratorTable table{nullptr};
  std::vector<Automorphism> automorphisms;     ///< Σ-level generators
  std::vector<AfoEntry> afos;
  std::vector<EmbeddedAutomorphism> embedded;  ///< belt-level generators
  std::vector<RunwiseAutomorphism> runwise;    ///< khat / neumann generators
  std::optional<PointyAction> pointy;
  std::function<std::string(const GroupWord&)> normal_form;  ///< for the pointy action's own table
  std::optional<WreathSpec> wreath;
  bool zz2z = false;
  std::size_t khat_k = 0;
  std::optional<NeumannCA> neumann;
  std::optional<Presentation> presentation;
  std::vector<std::pair<std::string, PeriodicConfig>> configurations;
  VerifyParams verify;
  int windowed_radius = 0;  ///< 0 = derived radius

  std::optional<PeriodicConfig> configuration(std::string_view name) const;
};

/// Parses a JSON config document. Throws ParseError.
System parse_system(std::string_view json_text);
System load_system(const std::string& path);

/// Text form of a gallery action: "lamplighter m=2", "lamplighter m=2,3",
/// "shift n=3", "product(A; B)". Returns the action and an abstract normal form.
std::pair<PointyAction, std::function<std::string(const GroupWord&)>> parse_gallery_action(std::string_view text);

}  // namespace beltca::cli
