#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "zkosc/schrodinger_check.hpp"
#include "zkosc/shape_invariance.hpp"

namespace zkosc::cli {

enum class Command { Spectrum, VerifyAlgebra, VerifyStructure, VerifyChain, Schrodinger, Matrices };
enum class OutputFormat { Json, Csv, Table };

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToleranceEnv = "ZKOSC_TOL";

struct RunConfig {
  Command command = Command::Spectrum;
  std::string params_path;
  OutputFormat output = OutputFormat::Json;
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
  std::optional<std::int64_t> n_max;
  std::optional<std::size_t> depth;
  std::optional<Grid> grid;
  std::size_t cases = 100;
  int k_max = 5;
};

struct RunResult {
  int exit_code = 0;
  std::string document;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Throws Error{ConfigParse} on bad flags; returns nullopt after --help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::string* help_text = nullptr);

// Never throws: input and module errors become exit code 2 with an error document.
RunResult run(const RunConfig& config);

// --grid xmin,xmax,M
Grid parse_grid(const std::string& text);

// Parameter file schema: {"k", "sigma", "omega", "a0", "delta", "n0", "c0"?, "n_max"?}.
SipParams params_from_json(const nlohmann::json& doc);
ChainSpec chain_from_json(const nlohmann::json& doc, const std::optional<Grid>& grid_override);

// Deterministic serialization: insertion-ordered keys, doubles as %.17g.
std::string dump(const nlohmann::ordered_json& doc);

}  // namespace zkosc::cli
