#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kagome/butterfly.hpp"
#include "kagome/dataset_io.hpp"
#include "kagome/factorization.hpp"
#include "kagome/kernels.hpp"
#include "kagome/lattice.hpp"
#include "kagome/oracle.hpp"
#include "kagome/potential.hpp"
#include "kagome/spectra.hpp"
#include "kagome/svg.hpp"
#include "kagome/symbol.hpp"
#include "kagome/symmetry.hpp"

namespace kagome::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad values that CLI11 cannot catch on its own; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ReducedFlux parse_flux(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw UsageError("flux '" + s + "' must be written p/q");
  try {
    std::size_t used_p = 0, used_q = 0;
    const long p = std::stol(s.substr(0, slash), &used_p);
    const long q = std::stol(s.substr(slash + 1), &used_q);
    if (used_p != slash || used_q != s.size() - slash - 1) throw std::invalid_argument("trailing characters");
    return ReducedFlux(p, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad flux '" + s + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw UsageError("flux '" + s + "' out of range");
  }
}

ReducedFlux make_flux(long p, long q) {
  try {
    return ReducedFlux(p, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Model model_arg(const std::string& name) {
  try {
    return parse_model(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

double omega_arg(const std::string& text) {
  try {
    return parse_omega(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json intervals_json(const std::vector<Interval>& set) {
  Json a = Json::array();
  for (const auto& iv : set) a.push_back({iv.lo, iv.hi});
  return a;
}

Json flats_json(const std::vector<FlatBand>& flats) {
  Json a = Json::array();
  for (const auto& f : flats) {
    a.push_back({{"value", f.value}, {"multiplicity", f.multiplicity}, {"max_width", f.max_width}});
  }
  return a;
}

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

/// BUTTERFLY_THREADS wins over the flag when set.
int resolve_threads(int flag) {
  if (const char* env = std::getenv("BUTTERFLY_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("BUTTERFLY_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  return flag > 0 ? flag : default_threads();
}

struct Outcome {
  Json summary;
  bool passed = true;
};

// --- bands ---------------------------------------------------------------

struct BandsArgs {
  std::string model;
  long p = 0;
  long q = 1;
  std::string omega = "0";
  int grid = 60;
  int threads = 0;
  bool refine = false;
  std::string out;
};

Outcome run_bands(const BandsArgs& a) {
  const Model model = model_arg(a.model);
  const ReducedFlux flux = make_flux(a.p, a.q);
  SpectrumOptions opt;
  opt.grid = a.grid;
  opt.threads = resolve_threads(a.threads);
  opt.refine = a.refine;
  const double omega = omega_arg(a.omega);
  const SpectrumSet s = band_spectrum(model, flux, omega, opt);

  Outcome o;
  Json& j = o.summary;
  j["command"] = "bands";
  j["model"] = std::string(to_string(model));
  j["p"] = flux.p();
  j["q"] = flux.q();
  j["omega"] = omega;
  j["grid"] = a.grid;
  j["bands"] = Json::array();
  for (const auto& b : s.bands) j["bands"].push_back({{"index", b.index}, {"lo", b.lo}, {"hi", b.hi}});
  j["merged"] = intervals_json(s.merged);
  j["flat_bands"] = flats_json(detect_flat_bands(s));
  o.passed = s.bands.size() == static_cast<std::size_t>(block_count(model)) * static_cast<std::size_t>(flux.q());
  j["passed"] = o.passed;
  if (!a.out.empty()) write_text_file(a.out, j.dump(2) + "\n");
  return o;
}

// --- butterfly -----------------------------------------------------------

struct ButterflyArgs {
  std::string model;
  std::string omega = "0";
  int qmax = 1;
  int grid = 12;
  int threads = 0;
  std::string out;
  std::string svg;
  bool transpose = false;
  bool no_flat_highlight = false;
};

Outcome run_butterfly(const ButterflyArgs& a) {
  const Model model = model_arg(a.model);
  const double omega = omega_arg(a.omega);
  const int threads = resolve_threads(a.threads);
  const auto t0 = std::chrono::steady_clock::now();
  const ButterflyDataset ds = sweep(model, omega, {a.qmax, a.grid, threads});
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::filesystem::path out(a.out);
  if (out.extension() == ".json") {
    export_json(ds, out);
  } else {
    export_csv(ds, out);
  }
  if (!a.svg.empty()) {
    SvgOptions so;
    so.transpose = a.transpose;
    so.flat_highlight = !a.no_flat_highlight;
    render_svg(ds, a.svg, so);
  }

  const auto fractions = sweep_fractions(model, a.qmax);
  std::map<std::pair<long, long>, std::size_t> counts;
  for (const auto& r : ds.rows) ++counts[{r.p, r.q}];
  bool bands_ok = counts.size() == fractions.size();
  for (const auto& f : fractions) {
    bands_ok = bands_ok && counts[{f.p(), f.q()}] == static_cast<std::size_t>(block_count(model) * f.q());
  }

  Outcome o;
  Json& j = o.summary;
  j["command"] = "butterfly";
  j["model"] = std::string(to_string(model));
  j["omega"] = omega;
  j["qmax"] = a.qmax;
  j["grid"] = a.grid;
  j["threads"] = threads;
  j["kernels"] = std::string(to_string(active_kernels().isa));
  j["fractions"] = fractions.size();
  j["rows"] = ds.rows.size();
  j["bands_per_flux_ok"] = bands_ok;
  j["elapsed_seconds"] = elapsed;
  j["out"] = a.out;
  if (!a.svg.empty()) j["svg"] = a.svg;
  o.passed = bands_ok;
  if (model == Model::kagome && omega == 0.0) {
    const ReflectionReport rr = reflection_smoke_test(ds);
    j["reflection"] = {{"fractions_checked", rr.fractions_checked},
                       {"max_deviation", rr.max_deviation},
                       {"passed", rr.passed}};
    o.passed = o.passed && rr.passed;
  }
  j["passed"] = o.passed;
  return o;
}

// --- verify --------------------------------------------------------------

struct SymmetryArgs {
  std::string model;
  std::string omega = "0.1";
  std::string cases = "all";
  std::string fluxes = "0/1,1/3,-1/4,2/5,3/7,-5/6";
  int grid = 36;
  int threads = 0;
};

Outcome run_symmetries(const SymmetryArgs& a) {
  const Model model = model_arg(a.model);
  const double omega = omega_arg(a.omega);
  std::vector<std::string_view> ids;
  if (a.cases == "all") {
    for (const auto& r : symmetry_relations()) {
      if (r.model == model) ids.push_back(r.id);
    }
  } else {
    for (const auto& name : split_list(a.cases)) {
      const SymmetryRelation* rel = nullptr;
      try {
        rel = &find_relation(name);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (rel->model != model) throw UsageError("relation '" + name + "' does not apply to model " + a.model);
      ids.push_back(rel->id);
    }
  }
  std::vector<ReducedFlux> fluxes;
  for (const auto& f : split_list(a.fluxes)) fluxes.push_back(parse_flux(f));
  if (ids.empty() || fluxes.empty()) throw UsageError("nothing to check");

  Outcome o;
  Json& j = o.summary;
  j["command"] = "verify symmetries";
  j["model"] = a.model;
  j["grid"] = a.grid;
  j["tolerance"] = kSymmetryTolerance;
  j["results"] = Json::array();
  double worst = 0.0;
  const int threads = resolve_threads(a.threads);
  for (auto id : ids) {
    for (const auto& f : fluxes) {
      const SymmetryResult r = check_symmetry(id, f, omega, a.grid, threads);
      worst = std::max(worst, r.distance);
      o.passed = o.passed && r.passed;
      j["results"].push_back({{"relation", r.id},
                              {"p", r.flux.p()},
                              {"q", r.flux.q()},
                              {"omega", r.omega},
                              {"partner_p", r.partner_flux.p()},
                              {"partner_omega", r.partner_omega},
                              {"negated", r.negated},
                              {"distance", r.distance},
                              {"passed", r.passed}});
    }
  }
  j["max_distance"] = worst;
  j["passed"] = o.passed;
  return o;
}

struct FlatArgs {
  std::string omega;
  int grid = 60;
  int threads = 0;
};

Outcome run_flatbands(const FlatArgs& a) {
  std::vector<double> omegas;
  if (a.omega.empty()) {
    omegas = {0.0, std::numbers::pi / 8.0};
  } else {
    if (a.omega != "0" && a.omega != "pi8") throw UsageError("--omega must be 0 or pi8");
    omegas = {omega_arg(a.omega)};
  }
  Outcome o;
  Json& j = o.summary;
  j["command"] = "verify flatbands";
  j["grid"] = a.grid;
  j["cases"] = Json::array();
  const int threads = resolve_threads(a.threads);
  for (const auto& c : factorization_cases()) {
    if (std::find(omegas.begin(), omegas.end(), c.omega) == omegas.end()) continue;
    const FlatBandCaseResult r = verify_flat_band_case(c, a.grid, threads);
    o.passed = o.passed && r.passed;
    Json entry = {{"case", r.id},
                  {"p", c.p},
                  {"q", c.q},
                  {"omega", c.omega},
                  {"expected_value", r.expected_value},
                  {"expected_multiplicity", r.expected_multiplicity},
                  {"detected", flats_json(r.detected)},
                  {"value_error", r.detected.empty() ? Json(nullptr) : Json(r.value_error)},
                  {"max_width", r.max_width},
                  {"passed", r.passed}};
    j["cases"].push_back(entry);
  }
  j["passed"] = o.passed;
  return o;
}

struct FactorizationArgs {
  int samples = 100;
  std::uint64_t seed = 0;
};

Outcome run_factorizations(const FactorizationArgs& a) {
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  Outcome o;
  Json& j = o.summary;
  j["command"] = "verify factorizations";
  j["samples"] = a.samples;
  j["tolerance"] = kFactorizationTolerance;
  j["cases"] = Json::array();
  for (const auto& c : factorization_cases()) {
    const FactorizationResult r = verify_factorization(c.id, a.samples, a.seed);
    o.passed = o.passed && r.passed;
    j["cases"].push_back({{"case", r.id}, {"max_relative_deviation", r.max_relative_deviation}, {"passed", r.passed}});
  }
  j["passed"] = o.passed;
  return o;
}

struct OracleArgs {
  long p = 0;
  long q = 1;
  std::string omega = "0";
  int L1 = 0;
  int L2 = 4;
  bool calibrate = false;
};

Outcome run_oracle(const OracleArgs& a) {
  const ReducedFlux flux = make_flux(a.p, a.q);
  const double omega = omega_arg(a.omega);
  const int L1 = a.L1 > 0 ? a.L1 : static_cast<int>(2 * flux.q());
  if (L1 % flux.q() != 0 || L1 < 2 || a.L2 < 2) throw UsageError("need L1, L2 >= 2 and q | L1");
  const OracleResult r = isospectrality_check(flux, omega, L1, a.L2);

  Outcome o;
  Json& j = o.summary;
  j["command"] = "verify oracle";
  j["p"] = flux.p();
  j["q"] = flux.q();
  j["omega"] = omega;
  j["L1"] = L1;
  j["L2"] = a.L2;
  j["size"] = r.size;
  j["deviation"] = r.deviation;
  j["tolerance"] = kOracleTolerance;
  if (a.calibrate) {
    j["calibration"] = Json::array();
    for (const auto& e : calibrate_phase_grid(flux, omega, L1, a.L2)) {
      j["calibration"].push_back({{"theta1_scaled_by_q", e.convention.theta1_scaled_by_q},
                                  {"sign1", e.convention.sign1},
                                  {"sign2", e.convention.sign2},
                                  {"deviation", e.deviation}});
    }
  }
  o.passed = r.passed;
  j["passed"] = o.passed;
  return o;
}

struct SymbolArgs {
  int samples = 1000;
  std::uint64_t seed = 0;
};

Outcome run_symbol(const SymbolArgs& a) {
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  constexpr double tol = 1e-12;
  const SymbolSymmetryReport r = verify_symbol_symmetries(a.samples, a.seed);
  Outcome o;
  Json& j = o.summary;
  j["command"] = "verify symbol";
  j["samples"] = a.samples;
  j["tolerance"] = tol;
  j["deviations"] = {{"translation_x", r.translation_x},
                     {"translation_xi", r.translation_xi},
                     {"rotation", r.rotation},
                     {"conjugation", r.conjugation},
                     {"hermiticity", r.hermiticity}};
  o.passed = r.max_deviation() < tol;
  j["passed"] = o.passed;
  return o;
}

// --- potential -----------------------------------------------------------

struct PotentialArgs {
  int exponent = 2;
  int grid = 1024;
  std::string out;
};

Outcome run_potential(const PotentialArgs& a) {
  if (a.grid < 2) throw UsageError("--grid must be >= 2");
  PotentialParams params;
  params.exponent = a.exponent;
  SupOptions so;
  so.grid = a.grid;
  std::optional<KagomePotential> pot;
  try {
    pot.emplace(params, so);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const KagomePotential& V = *pot;
  const SupResult sup = find_sup(params, so);
  double sup_lattice_distance = std::numeric_limits<double>::infinity();
  for (const auto& pt : enumerate_points(2)) {
    sup_lattice_distance = std::min(sup_lattice_distance, norm(pt.cartesian() - sup.argmax));
  }

  constexpr double well_tol = 1e-6;
  const auto wells = verify_wells(V, well_tol);
  const InvarianceReport inv = check_invariance(V, 1000);
  const double vmin = grid_minimum(V, a.grid);

  Outcome o;
  bool ok = inv.max_deviation() < 1e-10 && vmin >= -1e-9;
  Json wj = Json::array();
  for (const auto& w : wells) {
    ok = ok && w.located && w.positive_definite && w.gradient_norm < 1e-6 && w.richardson_deviation < 1e-4;
    ok = ok && std::abs(w.value - wells.front().value) <= 1e-9;
    for (int i = 0; i < 2; ++i) {
      ok = ok && std::abs(w.hessian_eigenvalues[i] - wells.front().hessian_eigenvalues[i]) <=
                     1e-6 * std::abs(wells.front().hessian_eigenvalues[i]);
    }
    const auto lp = w.nearest_lattice_point;
    wj.push_back({{"location", {w.location.x, w.location.y}},
                  {"value", w.value},
                  {"hessian_eigenvalues", {w.hessian_eigenvalues[0], w.hessian_eigenvalues[1]}},
                  {"nearest_lattice_point", {{"alpha", {lp.alpha().a1, lp.alpha().a2}}, {"ell", lp.ell()}}},
                  {"offset", w.offset},
                  {"gradient_norm", w.gradient_norm},
                  {"richardson_deviation", w.richardson_deviation},
                  {"positive_definite", w.positive_definite},
                  {"zero_at_minimum", w.zero_at_minimum}});
  }
  if (!a.out.empty()) write_text_file(a.out, wj.dump(2) + "\n");

  Json& j = o.summary;
  j["command"] = "potential check";
  j["exponent"] = a.exponent;
  j["grid"] = a.grid;
  j["sup_value"] = V.sup_value();
  j["sup_argmax"] = {sup.argmax.x, sup.argmax.y};
  j["sup_argmax_lattice_distance"] = sup_lattice_distance;
  j["grid_minimum"] = vmin;
  j["invariance"] = {{"translation1", inv.translation1}, {"translation2", inv.translation2}, {"rotation", inv.rotation}};
  j["wells"] = wj;
  o.passed = ok;
  j["passed"] = ok;
  return o;
}

}  // namespace

double parse_omega(const std::string& text) {
  if (text == "pi8") return std::numbers::pi / 8.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("omega must be a number or pi8, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("omega must be a number or pi8, got '" + text + "'");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magnetic tight-binding spectra: kagome, square, triangular and hexagonal lattices", "kagome"};
  app.require_subcommand(1);
  const std::string models = "square|triangular|hexagonal|kagome";

  BandsArgs bands;
  auto* bands_cmd = app.add_subcommand("bands", "Band intervals at one rational flux");
  bands_cmd->add_option("--model", bands.model, models)->required();
  bands_cmd->add_option("--p", bands.p, "flux numerator")->required();
  bands_cmd->add_option("--q", bands.q, "flux denominator")->required();
  bands_cmd->add_option("--omega", bands.omega, "phase omega (number or pi8)");
  bands_cmd->add_option("--grid", bands.grid, "torus samples per axis")->capture_default_str();
  bands_cmd->add_option("--threads", bands.threads, "worker threads (default: all)");
  bands_cmd->add_flag("--refine", bands.refine, "golden-section polish of band edges");
  bands_cmd->add_option("--out", bands.out, "also write the summary JSON here");

  ButterflyArgs bf;
  auto* bf_cmd = app.add_subcommand("butterfly", "Flux sweep over all p/q with q <= qmax");
  bf_cmd->add_option("--model", bf.model, models)->required();
  bf_cmd->add_option("--omega", bf.omega, "phase omega (number or pi8)")->capture_default_str();
  bf_cmd->add_option("--qmax", bf.qmax, "largest denominator")->required();
  bf_cmd->add_option("--grid", bf.grid, "torus samples per axis")->capture_default_str();
  bf_cmd->add_option("--threads", bf.threads, "worker threads (default: all; BUTTERFLY_THREADS overrides)");
  bf_cmd->add_option("--out", bf.out, "dataset path (.json for JSON, CSV otherwise)")->required();
  bf_cmd->add_option("--svg", bf.svg, "render the butterfly here");
  bf_cmd->add_flag("--transpose", bf.transpose, "energy on the horizontal axis");
  bf_cmd->add_flag("--no-flat-highlight", bf.no_flat_highlight, "do not mark flat bands");

  auto* verify = app.add_subcommand("verify", "Numerical checks");
  verify->require_subcommand(1);

  SymmetryArgs sym;
  auto* sym_cmd = verify->add_subcommand("symmetries", "Spectral symmetry relations");
  sym_cmd->add_option("--model", sym.model, models)->required();
  sym_cmd->add_option("--omega", sym.omega, "omega for relations valid at any omega")->capture_default_str();
  sym_cmd->add_option("--cases", sym.cases, "comma-separated relation ids or all")->capture_default_str();
  sym_cmd->add_option("--flux", sym.fluxes, "comma-separated p/q list")->capture_default_str();
  sym_cmd->add_option("--grid", sym.grid, "torus samples per axis")->capture_default_str();
  sym_cmd->add_option("--threads", sym.threads, "worker threads (default: all)");

  FlatArgs flat;
  auto* flat_cmd = verify->add_subcommand("flatbands", "Flat-band catalog");
  flat_cmd->add_option("--omega", flat.omega, "0 or pi8 (default: both)");
  flat_cmd->add_option("--grid", flat.grid, "torus samples per axis")->capture_default_str();
  flat_cmd->add_option("--threads", flat.threads, "worker threads (default: all)");

  FactorizationArgs fac;
  auto* fac_cmd = verify->add_subcommand("factorizations", "Closed-form characteristic polynomials");
  fac_cmd->add_option("--samples", fac.samples, "random (lambda, theta) per case")->capture_default_str();
  fac_cmd->add_option("--seed", fac.seed, "random seed")->capture_default_str();

  OracleArgs orc;
  auto* orc_cmd = verify->add_subcommand("oracle", "Torus truncation against the Bloch family");
  orc_cmd->add_option("--p", orc.p, "flux numerator")->required();
  orc_cmd->add_option("--q", orc.q, "flux denominator")->required();
  orc_cmd->add_option("--omega", orc.omega, "phase omega (number or pi8)")->capture_default_str();
  orc_cmd->add_option("--L1", orc.L1, "torus length along alpha1 (default 2q)");
  orc_cmd->add_option("--L2", orc.L2, "torus length along alpha2")->capture_default_str();
  orc_cmd->add_flag("--calibrate", orc.calibrate, "report all phase-grid conventions");

  SymbolArgs symb;
  auto* symb_cmd = verify->add_subcommand("symbol", "Symbol symmetry identities");
  symb_cmd->add_option("--samples", symb.samples, "random points")->capture_default_str();
  symb_cmd->add_option("--seed", symb.seed, "random seed")->capture_default_str();

  auto* potential = app.add_subcommand("potential", "Kagome potential");
  potential->require_subcommand(1);
  PotentialArgs pot;
  auto* pot_cmd = potential->add_subcommand("check", "Wells, Hessians and invariance");
  pot_cmd->add_option("--exponent", pot.exponent, "even exponent")->capture_default_str();
  pot_cmd->add_option("--grid", pot.grid, "sup / minimum grid per axis")->capture_default_str();
  pot_cmd->add_option("--out", pot.out, "write the well reports as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    Outcome o;
    if (*bands_cmd) {
      o = run_bands(bands);
    } else if (*bf_cmd) {
      o = run_butterfly(bf);
    } else if (*sym_cmd) {
      o = run_symmetries(sym);
    } else if (*flat_cmd) {
      o = run_flatbands(flat);
    } else if (*fac_cmd) {
      o = run_factorizations(fac);
    } else if (*orc_cmd) {
      o = run_oracle(orc);
    } else if (*symb_cmd) {
      o = run_symbol(symb);
    } else if (*pot_cmd) {
      o = run_potential(pot);
    }
    out << o.summary.dump(2) << '\n';
    return o.passed ? kExitOk : kExitFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace kagome::cli
