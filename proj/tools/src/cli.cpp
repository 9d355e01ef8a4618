#include "vira_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "vira/vira.hpp"

namespace vira::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kVerifyKinds = {
    "witt-jacobi", "cocycle", "extension", "virasoro-constants", "heisenberg", "primary-field",
    "normal-pair", "sugawara", "verma",     "verma-hw",           "intertwine", "sum-identity"};

struct Config {
  std::string kind;
  Index window = 8;
  Index max_index = 4;
  int max_level = 5;
  std::string alpha = "1/2";
  std::string c = "1";
  std::string h = "1/8";
  std::string input;
  bool virasoro = false;
  std::string format = "json";
  unsigned jobs = 1;
  bool window_given = false;
};

/// Malformed flags or files; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool text) : out_(out), text_(text) {}

  void emit(const json& record) {
    if (text_) {
      if (!first_) out_ << "\n";
      out_ << to_text(record);
    } else {
      out_ << record.dump() << "\n";
    }
    first_ = false;
    out_.flush();
  }

 private:
  std::ostream& out_;
  bool text_;
  bool first_ = true;
};

void add_common_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--window", cfg.window, "cocycle window W (indices |n| <= W)")
      ->envname("VIRA_WINDOW")
      ->check(CLI::NonNegativeNumber)
      ->each([&cfg](const std::string&) { cfg.window_given = true; });
  cmd.add_option("--max-index", cfg.max_index, "largest generator index in sweeps")
      ->envname("VIRA_MAX_INDEX")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--max-level", cfg.max_level, "largest basis level in module sweeps")
      ->envname("VIRA_MAX_LEVEL")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--alpha", cfg.alpha, "Fock space charge p/q")->envname("VIRA_ALPHA");
  cmd.add_option("--c", cfg.c, "central charge p/q")->envname("VIRA_C");
  cmd.add_option("--h", cfg.h, "conformal weight p/q")->envname("VIRA_H");
  cmd.add_option("--format", cfg.format, "output format")
      ->envname("VIRA_FORMAT")
      ->check(CLI::IsMember({"json", "text"}));
  cmd.add_option("--jobs", cfg.jobs, "worker threads for sweeps (0 = all cores)")->envname("VIRA_JOBS");
}

void add_input_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--input", cfg.input, "cocycle table file")->envname("VIRA_INPUT");
  cmd.add_flag("--virasoro", cfg.virasoro, "use the Virasoro cocycle");
}

SweepOptions sweep_options(const Config& cfg) {
  unsigned jobs = cfg.jobs;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return SweepOptions{jobs};
}

TwoCocycleTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_cocycle_table(in);
}

/// The cocycle named by --input or --virasoro, and the window to use: the
/// explicit --window if given, else the table's window for file input.
std::pair<CocycleOracle, Index> select_cocycle(const Config& cfg) {
  if (cfg.virasoro == !cfg.input.empty()) throw UsageError("exactly one of --input or --virasoro is required");
  if (cfg.virasoro) return {virasoro_oracle(), cfg.window};
  const TwoCocycleTable table = load_table(cfg.input);
  return {CocycleOracle::from_table(table), cfg.window_given ? cfg.window : table.window()};
}

int emit_reports(const std::vector<VerificationReport>& reports, Emitter& em) {
  int code = exit_pass;
  for (const auto& r : reports) {
    em.emit(to_json(r));
    if (r.status == Status::input_error) code = std::max(code, int{exit_input_error});
    if (r.status == Status::fail) code = std::max(code, int{exit_fail});
  }
  return code;
}

std::vector<VerificationReport> verify_reports(const Config& cfg) {
  const auto opts = sweep_options(cfg);
  const Index n = cfg.max_index;
  const int level = cfg.max_level;
  const std::string& k = cfg.kind;
  // Parse every scalar flag up front so malformed values fail regardless of kind.
  const Scalar alpha = Scalar::parse(cfg.alpha);
  const Scalar c = Scalar::parse(cfg.c);
  const Scalar h = Scalar::parse(cfg.h);

  if (k == "witt-jacobi") return {check_witt_jacobi_basis(n, opts)};
  if (k == "cocycle") {
    const auto [omega, window] = select_cocycle(cfg);
    return {check_cocycle_identity(omega, window, opts)};
  }
  if (k == "extension") {
    return {check_extension_predicate(BaseAlgebra::witt(), virasoro_oracle(), n, opts),
            check_extension_predicate(BaseAlgebra::abelian(), heisenberg_oracle(), n, opts)};
  }
  if (k == "virasoro-constants") return {check_virasoro_constants(n, opts)};
  if (k == "heisenberg") {
    return {check_heisenberg_constants(n, opts), check_heisenberg_relations(n, level, alpha, opts)};
  }
  if (k == "primary-field") return {check_primary_field(n, level, alpha, opts)};
  if (k == "normal-pair") {
    return {check_normal_pair_symmetry(n, level, alpha, opts),
            check_normal_pair_vanishing(n, level, n, alpha, opts),
            check_normal_pair_commutators(n, n, level, alpha, opts)};
  }
  if (k == "sugawara") return {check_sugawara_commutator(n, level, alpha, opts)};
  if (k == "verma") return {check_verma_relations(n, level, c, h, opts)};
  if (k == "verma-hw") return {verma_hw_check(c, h)};
  if (k == "intertwine") return {check_intertwining(alpha, n, level, opts)};
  if (k == "sum-identity") return {check_weighted_sums(n)};
  throw UsageError("unknown check kind '" + k + "'");
}

int cmd_verify(const Config& cfg, Emitter& em) { return emit_reports(verify_reports(cfg), em); }

int cmd_reduce(const Config& cfg, Emitter& em, std::ostream& err) {
  const auto [omega, window] = select_cocycle(cfg);
  CocycleReduction red;
  try {
    red = reduce_cocycle(omega, window, sweep_options(cfg));
  } catch (const NotACocycleError& e) {
    em.emit(to_json(e.report()));
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  em.emit(to_json(red.precondition));
  json beta = json::array();
  for (Index n = -window; n <= window; ++n) beta.push_back(json::array({n, red.beta(n).str()}));
  em.emit(json{{"record", "reduction"},
               {"cocycle", omega.name()},
               {"window", window},
               {"r", red.r.str()},
               {"beta", beta}});
  em.emit(to_json(red.residual));
  return red.residual.passed() ? exit_pass : exit_fail;
}

int cmd_nontrivial(const Config& cfg, Emitter& em) {
  const auto [omega, window] = select_cocycle(cfg);
  if (omega.domain() && window > *omega.domain()) {
    throw UsageError("window " + std::to_string(window) + " exceeds the table's window " +
                     std::to_string(*omega.domain()));
  }
  const auto w = nontriviality_witness(omega, window);
  json record{{"record", "witness"}, {"cocycle", omega.name()}, {"window", window}};
  if (w) {
    record["witness"] = json::array({w->first, w->second});
    record["message"] = "witness pair found";
  } else {
    record["witness"] = nullptr;
    record["message"] = "no witness in window";
  }
  em.emit(record);
  return exit_pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Witt, Virasoro and Heisenberg algebra identities", "vira"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Config cfg;

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("kind", cfg.kind, "check to run")->required()->check(CLI::IsMember(kVerifyKinds));
  add_common_options(*verify, cfg);
  add_input_options(*verify, cfg);

  auto* reduce = app.add_subcommand("reduce", "bring a tabulated cocycle to r * omega_vir + d(beta) form");
  add_common_options(*reduce, cfg);
  add_input_options(*reduce, cfg);

  auto* nontrivial = app.add_subcommand("nontrivial", "search for a non-coboundary witness pair");
  add_common_options(*nontrivial, cfg);
  add_input_options(*nontrivial, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }

  Emitter em(out, cfg.format == "text");
  try {
    if (verify->parsed()) return cmd_verify(cfg, em);
    if (reduce->parsed()) return cmd_reduce(cfg, em, err);
    return cmd_nontrivial(cfg, em);
  } catch (const ScalarParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return exit_input_error;
}

}  // namespace vira::cli
