#include "zkosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "zkosc/error.hpp"
#include "zkosc/graded_fock.hpp"
#include "zkosc/oscillator_algebra.hpp"
#include "zkosc/sampling.hpp"

namespace zkosc::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::map<std::string, Command> kCommands = {
    {"spectrum", Command::Spectrum},         {"verify-algebra", Command::VerifyAlgebra},
    {"verify-structure", Command::VerifyStructure}, {"verify-chain", Command::VerifyChain},
    {"schrodinger", Command::Schrodinger},   {"matrices", Command::Matrices},
};

std::string command_name(Command c) {
  for (const auto& [name, value] : kCommands) {
    if (value == c) return name;
  }
  return "unknown";
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_scalar(const ojson& j) { return !j.is_array() && !j.is_object(); }

void emit(const ojson& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case ojson::value_t::null: out += "null"; break;
    case ojson::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case ojson::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case ojson::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case ojson::value_t::number_float: out += format_double(j.get<double>()); break;
    case ojson::value_t::string: out += ojson(j.get<std::string>()).dump(); break;
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += "[";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += "\n" + pad;
        emit(item, out, indent + 2);
        first = false;
      }
      if (!flat) out += "\n" + close_pad;
      out += "]";
      break;
    }
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",";
        out += "\n" + pad + ojson(key).dump() + ": ";
        emit(value, out, indent + 2);
        first = false;
      }
      out += "\n" + close_pad + "}";
      break;
    }
    default: out += "null"; break;
  }
}

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::ConfigParse, message); }

nlohmann::json read_json_file(const std::string& path) {
  if (path.empty()) parse_error("--params <path> is required for this command");
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

template <typename T>
T required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    parse_error(std::string("field '") + key + "' has the wrong type");
  }
}

template <typename T>
T optional_field(const nlohmann::json& doc, const char* key, T fallback) {
  return doc.contains(key) ? required<T>(doc, key) : fallback;
}

Grid grid_from_json(const nlohmann::json& doc) {
  return make_grid(required<double>(doc, "x_min"), required<double>(doc, "x_max"),
                   required<std::size_t>(doc, "points"));
}

Family family_from_json(const nlohmann::json& doc) {
  const auto name = required<std::string>(doc, "family");
  Family f;
  if (name == "Harmonic") {
    f.kind = FamilyKind::Harmonic;
  } else if (name == "PoschlTellerI") {
    f.kind = FamilyKind::PoschlTellerI;
  } else if (name == "PoschlTellerII") {
    f.kind = FamilyKind::PoschlTellerII;
  } else {
    parse_error("unknown family '" + name + "' (Harmonic, PoschlTellerI, PoschlTellerII)");
  }
  f.strength = required<double>(doc, "strength");
  return f;
}

Grid default_grid(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Harmonic: return make_grid(-8.0, 8.0, 2000);
    case FamilyKind::PoschlTellerI: return interior_grid(-std::numbers::pi / 2.0, std::numbers::pi / 2.0, 3000);
    case FamilyKind::PoschlTellerII: return make_grid(-12.0, 12.0, 3000);
  }
  return make_grid(-1.0, 1.0, 100);
}

double default_family_tolerance(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Harmonic: return 1e-3;
    case FamilyKind::PoschlTellerI: return 2e-2;
    case FamilyKind::PoschlTellerII: return 1e-2;
  }
  return 1e-2;
}

std::optional<double> env_tolerance() {
  const char* raw = std::getenv(kToleranceEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0)) {
    parse_error(std::string(kToleranceEnv) + " must be a positive number, got '" + raw + "'");
  }
  return value;
}

double resolve_tolerance(const RunConfig& cfg, double fallback) {
  if (cfg.tolerance) return *cfg.tolerance;
  if (auto env = env_tolerance()) return *env;
  return fallback;
}

ojson params_json(const SipParams& p) {
  ojson j;
  j["k"] = p.k;
  j["sigma"] = p.sigma;
  j["omega"] = p.omega;
  j["a0"] = p.a0;
  j["delta"] = p.delta;
  j["n0"] = p.n0;
  j["c0"] = p.c0;
  return j;
}

ojson grid_json(const Grid& g) {
  ojson j;
  j["x_min"] = g.x_min;
  j["x_max"] = g.x_max;
  j["points"] = g.points;
  return j;
}

ojson header(Command c) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_name(c);
  return j;
}

std::size_t default_depth(const ValidatedParams& vp) {
  const auto reachable = static_cast<std::size_t>(vp.k()) * static_cast<std::size_t>(vp.params().n0) + 1;
  return std::min<std::size_t>(16, reachable);
}

struct Outcome {
  ojson doc;
  bool pass = false;
  // Rows for the spectrum CSV/table layout.
  std::vector<std::vector<double>> spectrum_rows;
};

Outcome run_spectrum(const RunConfig& cfg) {
  const auto raw = read_json_file(cfg.params_path);
  const auto vp = validate(params_from_json(raw));
  const std::int64_t n_max = cfg.n_max.value_or(optional_field<std::int64_t>(raw, "n_max", 10));
  const double tol = resolve_tolerance(cfg, 1e-10);

  const auto unified = energy_spectrum(vp, n_max, SpectrumMethod::UnifiedSum);
  const auto blocks = energy_spectrum(vp, n_max, SpectrumMethod::Blocks);
  const auto diff = energy_spectrum(vp, n_max, SpectrumMethod::StructureDiff);

  Outcome out;
  double deviation = 0.0;
  for (std::size_t n = 0; n < unified.energies.size(); ++n) {
    const double u = unified.energies[n], b = blocks.energies[n], f = diff.energies[n];
    const double level_dev = std::max({relative_deviation(u, b), relative_deviation(u, f), relative_deviation(b, f)});
    deviation = std::max(deviation, level_dev);
    out.spectrum_rows.push_back({static_cast<double>(n), u, b, f, level_dev});
  }

  out.doc = header(cfg.command);
  out.doc["params"] = params_json(vp.params());
  out.doc["n_max"] = n_max;
  out.doc["energies"] = unified.energies;
  out.doc["methods"]["unified_sum"] = unified.energies;
  out.doc["methods"]["blocks"] = blocks.energies;
  out.doc["methods"]["structure_diff"] = diff.energies;
  out.doc["method_deviation"] = deviation;
  out.doc["monotone"] = unified.monotone;
  out.doc["cyclic"] = is_cyclic(vp);
  if (auto cycle = remainder_cycle(vp)) {
    out.doc["remainder_cycle"] = *cycle;
  } else {
    out.doc["remainder_cycle"] = nullptr;
  }
  out.doc["tolerance"] = tol;
  out.pass = deviation <= tol && unified.energies.front() == 0.0 && blocks.energies.front() == 0.0 &&
             diff.energies.front() == 0.0;
  return out;
}

Outcome run_verify_algebra(const RunConfig& cfg) {
  const auto vp = validate(params_from_json(read_json_file(cfg.params_path)));
  const double tol = resolve_tolerance(cfg, kDefaultAlgebraTolerance);
  const auto window = make_window(vp.k(), cfg.depth.value_or(default_depth(vp)), vp.params().n0, Convention::Descending);
  const auto F = structure_for_window(vp, window, true);
  const auto report = check_algebra(window, F, tol);
  const double decomposition = decomposition_residual(window, F);

  Outcome out;
  out.doc = header(cfg.command);
  out.doc["k"] = window.k();
  out.doc["depth"] = window.depth();
  out.doc["n0"] = window.n0();
  out.doc["convention"] = "descending";
  out.doc["lowest_weight"] = true;
  ojson residuals = ojson::object();
  for (const auto& [name, value] : report.residuals) residuals[name] = value;
  out.doc["residuals"] = residuals;
  out.doc["decomposition_residual"] = decomposition;
  out.doc["max_residual"] = report.max_residual();
  out.doc["boundary_excluded"] = report.boundary_excluded;
  out.doc["boundary_index"] = report.boundary_index;
  out.doc["tolerance"] = tol;
  out.pass = report.pass && decomposition <= tol;
  return out;
}

Outcome run_verify_structure(const RunConfig& cfg) {
  const double tol = resolve_tolerance(cfg, 1e-9);
  const std::int64_t n_max = cfg.n_max.value_or(200);
  if (cfg.k_max < 1) parse_error("--k-max must be at least 1");
  if (n_max < 0) parse_error("--n-max must be nonnegative");

  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0, worst_method = 0.0;
  std::size_t worst_case = 0;
  SipParams worst_params;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const auto vp = validate(random_params(rng, cfg.k_max));
    const auto closed = structure_table(vp, n_max).values;
    const auto recursive = structure_recursive(vp, n_max).values;
    double dev = 0.0;
    for (std::size_t n = 0; n < closed.size(); ++n) dev = std::max(dev, relative_deviation(closed[n], recursive[n]));
    if (dev > worst || i == 0) {
      worst = std::max(worst, dev);
      worst_case = i;
      worst_params = vp.params();
    }
    worst_method = std::max(worst_method, method_deviation(vp, n_max));
  }

  Outcome out;
  out.doc = header(cfg.command);
  out.doc["seed"] = cfg.seed;
  out.doc["cases"] = cfg.cases;
  out.doc["k_max"] = cfg.k_max;
  out.doc["n_max"] = n_max;
  out.doc["max_deviation"] = worst;
  out.doc["max_method_deviation"] = worst_method;
  out.doc["worst_case"] = cfg.cases > 0 ? ojson{{"index", worst_case}, {"params", params_json(worst_params)}} : ojson();
  out.doc["tolerance"] = tol;
  out.pass = worst <= tol;
  return out;
}

Outcome run_verify_chain(const RunConfig& cfg) {
  const auto chain = chain_from_json(read_json_file(cfg.params_path), cfg.grid);
  const bool analytic = chain.w_prime.size() == chain.w.size() && !chain.w_shifted_prime.empty();
  const double tol = resolve_tolerance(cfg, analytic ? 1e-10 : 1e-6);
  const auto report = verify_chain(chain, tol);

  Outcome out;
  out.doc = header(cfg.command);
  out.doc["k"] = chain.w.size();
  out.doc["grid"] = grid_json(chain.grid);
  out.doc["residuals"] = report.residuals;
  out.doc["max_residual"] = report.max_residual;
  out.doc["derivative_order"] = report.derivative_order;
  out.doc["tolerance"] = tol;
  out.pass = report.pass;
  return out;
}

Outcome run_schrodinger(const RunConfig& cfg) {
  const auto raw = read_json_file(cfg.params_path);
  const Family family = family_from_json(raw);
  const auto count = optional_field<std::size_t>(raw, "count", 3);
  Grid grid = cfg.grid ? *cfg.grid : (raw.contains("grid") ? grid_from_json(raw.at("grid")) : default_grid(family));
  const double tol = resolve_tolerance(cfg, optional_field<double>(raw, "tolerance", default_family_tolerance(family)));

  const auto sampled = sample_family(family, grid);
  const auto numeric = eigensolve(sampled.v_minus, count);
  const auto algebraic =
      energy_spectrum(validate(family_params(family)), static_cast<std::int64_t>(count), SpectrumMethod::UnifiedSum);
  const auto cmp = compare_spectra(numeric, algebraic, tol, continuum_edge(family));
  const auto partners = verify_partners(sampled.w, sampled.w_prime, count - 1 > 0 ? count - 1 : 1, tol);

  Outcome out;
  out.doc = header(cfg.command);
  out.doc["family"] = family_name(family.kind);
  out.doc["strength"] = family.strength;
  out.doc["grid"] = grid_json(grid);
  out.doc["count"] = count;
  out.doc["numeric"] = cmp.numeric;
  out.doc["algebraic"] = cmp.algebraic;
  out.doc["differences"] = cmp.differences;
  out.doc["compared_levels"] = cmp.compared;
  out.doc["excluded_levels"] = cmp.excluded;
  out.doc["cutoff"] = cmp.cutoff;
  out.doc["partners"]["minus_levels"] = partners.minus_levels;
  out.doc["partners"]["plus_levels"] = partners.plus_levels;
  out.doc["partners"]["differences"] = partners.differences;
  out.doc["partners"]["identical_partners"] = partners.identical_partners;
  out.doc["partners"]["pass"] = partners.pass;
  out.doc["tolerance"] = tol;
  out.pass = cmp.pass && partners.pass;
  return out;
}

ojson matrix_json(const ComplexMatrix& m) {
  ojson re = ojson::array(), im = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row_re = ojson::array(), row_im = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row_re.push_back(m(r, c).real());
      row_im.push_back(m(r, c).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  return ojson{{"real", re}, {"imag", im}};
}

Outcome run_matrices(const RunConfig& cfg) {
  if (cfg.output != OutputFormat::Json) parse_error("matrices only supports --output json");
  const auto vp = validate(params_from_json(read_json_file(cfg.params_path)));
  const auto window = make_window(vp.k(), cfg.depth.value_or(default_depth(vp)), vp.params().n0, Convention::Descending);
  const auto F = structure_for_window(vp, window, true);
  const auto g = build_generators(window, F);

  Outcome out;
  out.doc = header(cfg.command);
  ojson states = ojson::array();
  for (const auto& st : window.states()) {
    states.push_back({{"index", st.index},
                      {"nu", ojson{{"num", st.nu.numerator()}, {"den", st.nu.denominator()}}},
                      {"grade", st.grade},
                      {"structure", F(st.nu_value())}});
  }
  out.doc["window"] = {{"k", window.k()}, {"depth", window.depth()}, {"n0", window.n0()},
                       {"convention", "descending"}, {"states", states}};
  out.doc["matrices"]["identity"] = matrix_json(g.identity.entries);
  out.doc["matrices"]["number"] = matrix_json(g.number.entries);
  out.doc["matrices"]["annihilation"] = matrix_json(g.annihilation.entries);
  out.doc["matrices"]["creation"] = matrix_json(g.creation.entries);
  out.doc["matrices"]["grading"] = matrix_json(g.grading.entries);
  ojson projectors = ojson::array();
  for (const auto& p : g.projectors) projectors.push_back(matrix_json(p.entries));
  out.doc["matrices"]["projectors"] = projectors;
  out.pass = true;
  return out;
}

std::string flat_value(const ojson& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + flat_value(v[i]);
    return s;
  }
  if (v.is_object()) return dump(v);
  std::string s;
  emit(v, s, 0);
  if (v.is_string()) s = v.get<std::string>();
  return s;
}

void flatten(const ojson& doc, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [key, value] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, rows);
    } else {
      rows.emplace_back(name, flat_value(value));
    }
  }
}

std::string render(const Outcome& out, const RunConfig& cfg) {
  if (cfg.output == OutputFormat::Json) return dump(out.doc);

  std::ostringstream os;
  char buf[256];
  if (cfg.command == Command::Spectrum) {
    if (cfg.output == OutputFormat::Csv) {
      os << "n,E_unified,E_blocks,E_structdiff,max_dev\n";
      for (const auto& r : out.spectrum_rows) {
        os << static_cast<std::int64_t>(r[0]) << ',' << format_double(r[1]) << ',' << format_double(r[2]) << ','
           << format_double(r[3]) << ',' << format_double(r[4]) << '\n';
      }
    } else {
      std::snprintf(buf, sizeof buf, "%6s %22s %22s %22s %12s\n", "n", "E_unified", "E_blocks", "E_structdiff",
                    "max_dev");
      os << buf;
      for (const auto& r : out.spectrum_rows) {
        std::snprintf(buf, sizeof buf, "%6lld %22.15g %22.15g %22.15g %12.3e\n", static_cast<long long>(r[0]), r[1],
                      r[2], r[3], r[4]);
        os << buf;
      }
      os << "method_deviation " << format_double(out.doc["method_deviation"].get<double>()) << '\n'
         << "pass " << (out.pass ? "true" : "false") << '\n';
    }
    return os.str();
  }

  std::vector<std::pair<std::string, std::string>> rows;
  flatten(out.doc, "", rows);
  if (cfg.output == OutputFormat::Csv) {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) os << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
  }
  return os.str();
}

std::string error_document(std::string_view kind, const std::string& message) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["error"] = {{"kind", std::string(kind)}, {"message", message}};
  return dump(doc);
}

}  // namespace

std::string dump(const nlohmann::ordered_json& doc) {
  std::string out;
  emit(doc, out, 0);
  out += "\n";
  return out;
}

Grid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) parse_error("--grid expects xmin,xmax,M");
  try {
    std::size_t used = 0;
    const double lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    const double hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    const long long m = std::stoll(parts[2], &used);
    if (used != parts[2].size() || m <= 0) throw std::invalid_argument(parts[2]);
    return make_grid(lo, hi, static_cast<std::size_t>(m));
  } catch (const std::logic_error&) {
    parse_error("--grid expects xmin,xmax,M with numeric entries, got '" + text + "'");
  }
}

SipParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) parse_error("parameter file must hold a JSON object");
  SipParams p;
  p.k = required<int>(doc, "k");
  p.sigma = required<std::vector<double>>(doc, "sigma");
  p.omega = required<std::vector<double>>(doc, "omega");
  p.a0 = required<double>(doc, "a0");
  p.delta = required<double>(doc, "delta");
  p.n0 = required<std::int64_t>(doc, "n0");
  p.c0 = optional_field<double>(doc, "c0", 0.0);
  return p;
}

ChainSpec chain_from_json(const nlohmann::json& doc, const std::optional<Grid>& grid_override) {
  if (!doc.is_object()) parse_error("chain file must hold a JSON object");
  if (doc.contains("family")) {
    const Family family = family_from_json(doc);
    const Grid grid = grid_override ? *grid_override
                                    : (doc.contains("grid") ? grid_from_json(doc.at("grid")) : default_grid(family));
    return family_chain(family, grid);
  }
  ChainSpec chain;
  chain.grid = grid_override ? *grid_override : grid_from_json(required<nlohmann::json>(doc, "grid"));
  chain.w = required<std::vector<std::vector<double>>>(doc, "superpotentials");
  chain.w_prime = optional_field<std::vector<std::vector<double>>>(doc, "derivatives", {});
  chain.w_shifted = required<std::vector<double>>(doc, "shifted");
  chain.w_shifted_prime = optional_field<std::vector<double>>(doc, "shifted_derivative", {});
  chain.remainders = required<std::vector<double>>(doc, "remainders");
  return chain;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::string* help_text) {
  CLI::App app{"Z_k-graded deformed oscillator toolkit for k-step shape-invariant potentials", "zkosc"};
  RunConfig cfg;
  std::string command, output = "json", grid;
  double tol = 0.0;
  std::int64_t n_max = 0;
  std::size_t depth = 0;

  std::vector<std::string> names;
  for (const auto& [name, value] : kCommands) names.push_back(name);
  app.add_option("command", command, "spectrum | verify-algebra | verify-structure | verify-chain | schrodinger | matrices")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--params", cfg.params_path, "JSON input file");
  app.add_option("--output", output, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  auto* tol_opt = app.add_option("--tol", tol, "tolerance override (also " + std::string(kToleranceEnv) + ")")
                      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for the verify-structure sweep");
  auto* n_opt = app.add_option("--n-max", n_max, "highest tower level")->check(CLI::NonNegativeNumber);
  auto* depth_opt = app.add_option("--depth", depth, "Fock window depth")->check(CLI::Range(2, 100000));
  auto* grid_opt = app.add_option("--grid", grid, "xmin,xmax,M");
  app.add_option("--cases", cfg.cases, "number of random cases for verify-structure");
  app.add_option("--k-max", cfg.k_max, "largest k for verify-structure")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help_text) *help_text = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    parse_error(e.what());
  }

  cfg.command = kCommands.at(command);
  cfg.output = output == "csv" ? OutputFormat::Csv : output == "table" ? OutputFormat::Table : OutputFormat::Json;
  if (*tol_opt) cfg.tolerance = tol;
  if (*n_opt) cfg.n_max = n_max;
  if (*depth_opt) cfg.depth = depth;
  if (*grid_opt) cfg.grid = parse_grid(grid);
  return cfg;
}

RunResult run(const RunConfig& config) {
  try {
    Outcome out;
    switch (config.command) {
      case Command::Spectrum: out = run_spectrum(config); break;
      case Command::VerifyAlgebra: out = run_verify_algebra(config); break;
      case Command::VerifyStructure: out = run_verify_structure(config); break;
      case Command::VerifyChain: out = run_verify_chain(config); break;
      case Command::Schrodinger: out = run_schrodinger(config); break;
      case Command::Matrices: out = run_matrices(config); break;
    }
    out.doc["pass"] = out.pass;
    return {out.pass ? kExitPass : kExitCheckFailed, render(out, config)};
  } catch (const Error& e) {
    return {kExitInputError, error_document(to_string(e.kind()), e.what())};
  } catch (const nlohmann::json::exception& e) {
    return {kExitInputError, error_document("ConfigParse", e.what())};
  }
}

}  // namespace zkosc::cli
