#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torusalg/cobaudit.hpp"
#include "torusalg/eulerflow.hpp"
#include "torusalg/maninbialg.hpp"
#include "torusalg/verify.hpp"

using namespace torusalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

int cmd_verify(int range, int bialgebra_range, std::uint64_t seed, const std::string& format,
               const std::string& out_path, bool corrupt_gamma) {
  if (range < 1) throw std::invalid_argument("--range must be >= 1");
  if (range > 3)
    std::cerr << "warning: exact verification above range 3 is expensive\n";

  DirectionTriple dirs = DirectionTriple::standard();
  if (corrupt_gamma) {
    // negative control: gamma deliberately not equal to alpha x beta
    Vec3F bad_gamma = dirs.gamma();
    bad_gamma[0] = bad_gamma[0] + FieldScalar(1);
    dirs = DirectionTriple::unchecked(dirs.alpha(), dirs.beta(), bad_gamma);
  }

  VerifyReport report = verify_bracket_tables(range, dirs);
  report.merge(verify_pairing_table(range, dirs));
  report.merge(verify_bialgebra(bialgebra_range > 0 ? bialgebra_range : std::min(range, 2), dirs));
  report.merge(verify_algebra_identities(1, 3, 200, seed, dirs));
  report.merge(verify_energy_identity(100, seed + 1, dirs));
  report.merge(verify_roundtrips(100, seed + 2, dirs));

  emit(format == "json" ? report.to_json() : report.to_text(), out_path);
  return report.all_pass() ? kExitOk : kExitIdentityFailure;
}

int cmd_structure_constants(int range, const std::string& out_path) {
  if (range < 1) throw std::invalid_argument("--range must be >= 1");
  std::ostringstream os;
  structure_table_csv(range, DirectionTriple::standard(), os);
  emit(os.str(), out_path);
  return kExitOk;
}

int cmd_rank_check(const std::string& indices_path, bool emit_json, const std::string& out_path) {
  const DirectionTriple& dirs = DirectionTriple::standard();
  std::vector<WaveVector> m_set = m1_row_indices(), n_set = m1_col_indices();
  if (!indices_path.empty()) {
    nlohmann::json j = nlohmann::json::parse(slurp(indices_path));
    m_set.clear();
    n_set.clear();
    for (const auto& v : j.at("m"))
      m_set.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>(),
                       v.at(2).get<std::int64_t>()});
    for (const auto& v : j.at("n"))
      n_set.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>(),
                       v.at(2).get<std::int64_t>()});
    if (m_set.empty() || n_set.empty())
      throw std::invalid_argument("--indices: empty index sets");
  }

  ObstructionReport rep = coboundary_obstruction_report(m_set, n_set, dirs);
  emit(emit_json ? rep.to_json() : rep.to_text(), out_path);

  if (rep.reference_sets) {
    bool ok = rep.rank == 3 && rep.entries_matched == 9 && rep.reduction_ok;
    return ok ? kExitOk : kExitIdentityFailure;
  }
  if (!rep.certified())
    std::cerr << "warning: " << rep.verdict << "\n";
  return kExitOk;
}

int cmd_simulate(const SimConfig& cfg, const std::string& out_path,
                 const std::string& snapshot_path) {
  RunResult result = run(cfg);
  if (result.cfl_warning)
    std::cerr << "warning: dt * |v| * cutoff > 1, the step size is aggressive\n";
  std::ostringstream os;
  write_csv(result, cfg, os);
  emit(os.str(), out_path);
  if (!snapshot_path.empty()) {
    std::ofstream snap(snapshot_path, std::ios::binary);
    if (!snap) throw std::invalid_argument("cannot write " + snapshot_path);
    snap << result.final_state.to_json();
  }
  if (result.blew_up) {
    std::cerr << "numerical failure: " << result.error << "; last valid time t = "
              << result.last_valid_time << "\n";
    return kExitNumericalFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification and spectral simulation for the extended algebra of "
      "incompressible fields on the 3-torus"};
  app.require_subcommand(1);

  // verify
  int range = 2, bialgebra_range = 0;
  std::uint64_t seed = 42;
  std::string format = "text", out_path, indices_path, config_path, snapshot_path;
  bool corrupt_gamma = false, emit_json = false;
  auto* verify = app.add_subcommand("verify", "run the exact identity suites");
  verify->add_option("--range", range, "exhaustive index range (default 2)");
  verify->add_option("--bialgebra-range", bialgebra_range,
                     "exhaustive range for the bialgebra sweeps (default min(range,2))");
  verify->add_option("--seed", seed, "seed for the randomized supplements");
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_flag("--corrupt-gamma", corrupt_gamma,
                   "negative control: use a triple with gamma != alpha x beta");

  // structure-constants
  int sc_range = 1;
  std::string sc_out;
  auto* sc = app.add_subcommand("structure-constants", "emit the exact structure-constant tables");
  sc->add_option("--range", sc_range, "index range (default 1)");
  sc->add_option("--out", sc_out, "output CSV path (default stdout)");

  // rank-check
  auto* rank = app.add_subcommand("rank-check", "non-coboundary rank certificate");
  rank->add_option("--indices", indices_path, "JSON file {\"m\": [[...]], \"n\": [[...]]}");
  rank->add_flag("--emit-json", emit_json, "machine-readable certificate");
  rank->add_option("--out", out_path, "write the certificate here instead of stdout");

  // simulate
  SimConfig cfg;
  std::string init_kind = "abc";
  auto* sim = app.add_subcommand("simulate", "integrate the extended vorticity equation");
  sim->add_option("--config", config_path, "JSON config file");
  sim->add_option("--cutoff", cfg.cutoff, "modes kept: |m_i| <= cutoff");
  sim->add_option("--dt", cfg.dt, "time step");
  sim->add_option("--t-final", cfg.t_final, "final time");
  sim->add_option("--init", init_kind, "abc|triad|random")
      ->check(CLI::IsMember({"abc", "triad", "random"}));
  sim->add_option("--seed", cfg.seed, "seed for the random initial condition");
  sim->add_option("--amplitude", cfg.amplitude, "initial amplitude");
  sim->add_option("--sample-stride", cfg.sample_stride, "steps between diagnostic samples");
  sim->add_option("--out", out_path, "output CSV path (default stdout)");
  sim->add_option("--snapshot-out", snapshot_path, "write the final state as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*verify)
      return cmd_verify(range, bialgebra_range, seed, format, out_path, corrupt_gamma);
    if (*sc) return cmd_structure_constants(sc_range, sc_out);
    if (*rank) return cmd_rank_check(indices_path, emit_json, out_path);
    if (*sim) {
      if (!config_path.empty()) {
        cfg = SimConfig::from_json(slurp(config_path));
      } else {
        cfg.init = init_kind == "abc"     ? InitKind::Abc
                   : init_kind == "triad" ? InitKind::Triad
                                          : InitKind::Random;
      }
      return cmd_simulate(cfg, out_path, snapshot_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
  return kExitConfigError;
}
