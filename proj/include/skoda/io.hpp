#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skoda/workbench.hpp"

namespace skoda {

/// Malformed ring, instance, manifest or config file.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct Config {
  std::string field = "Q";  // "Q" or a prime, e.g. "32003"
  std::string order = "grevlex";
  std::size_t cap_pairs = 200000;
  unsigned cap_degree = 40;
  unsigned closure_N = 6;
  unsigned closure_s = 8;
  int verbosity = 0;
  unsigned workers = 1;
  std::vector<std::string> corpus_paths;

  GbLimits limits() const { return {cap_pairs, cap_degree}; }
  ClosureCaps closure_caps() const { return {closure_N, closure_s}; }
  Field field_value() const;
  MonomialOrder order_value() const;
  /// Throws InputError on a non-positive cap or an unknown field or order.
  void validate() const;
};

nlohmann::json to_json(const Config& c);
/// Missing keys keep their defaults; unknown keys are rejected.
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);

/// {"field": "Q" | {"Fp": p}, "vars": [...], "relations": [...], "order": "grevlex" | "lex"}.
/// field and order fall back to the config.
Presentation ring_from_json(const nlohmann::json& j, const Config& cfg = {});
Presentation load_ring(const std::filesystem::path& path, const Config& cfg = {});

/// One Briancon-Skoda instance.
struct Instance {
  std::string name;
  Presentation ring;
  std::vector<Poly> J;
  unsigned k = 1;
  std::optional<std::vector<ClosureHint>> closure_gens;
  std::optional<bool> expect_holds;
};

/// {"ring": object or path relative to the file, "J": [...], "n": int, "k": int,
///  "closure_gens": [{"expr", "s"?, "via"?}], "expected": "HOLDS" | "FAILS"}.
Instance instance_from_json(const nlohmann::json& j, const std::filesystem::path& dir, const Config& cfg = {});
Instance load_instance(const std::filesystem::path& path, const Config& cfg = {});

/// Parses every expression, reporting the offending text on failure.
std::vector<Poly> parse_all(const Presentation& R, const std::vector<std::string>& exprs);

}  // namespace skoda
