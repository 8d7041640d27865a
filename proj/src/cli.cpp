#include "hornlr/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hornlr/check.hpp"
#include "hornlr/converse_scan.hpp"
#include "hornlr/horn_realize.hpp"
#include "hornlr/lr.hpp"
#include "hornlr/schur_weyl.hpp"
#include "hornlr/serialize.hpp"

namespace hornlr {

namespace {

enum class Format { json, csv, table };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void error_record(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

DominantWeight weight_arg(const std::string& text) {
  try {
    return parse_weight(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SpectralTriple triple_args(const std::string& mu, const std::string& nu, const std::string& lambda) {
  const auto m = weight_arg(mu);
  const auto n = weight_arg(nu);
  const auto l = weight_arg(lambda);
  if (m.dim() == n.dim() && n.dim() == l.dim()) return {m, n, l};
  return padded_triple(m, n, l);
}

// A density operator from a diagonal "0.7,0.3" or a JSON matrix file.
DensityOperator density_arg(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("cannot parse matrix file: ") + e.what());
    }
    try {
      return DensityOperator(matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<double> diag;
  try {
    diag = parse_reals(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return DensityOperator::diagonal(diag);
}

std::string weights_table(const DominantWeight& w) { return "(" + format_weight(w) + ")"; }

struct Options {
  std::uint64_t seed = 0;
  int workers = 0;
  std::string format = "json";
  std::string out_path;
  // lr
  std::string mu, nu, lambda;
  std::string method = "tableaux";
  int scaling_max = 0;
  // realize / sweep
  double tol = 1e-6;
  int restarts = 32;
  int steps = 2000;
  int max_boxes = 4;
  int d = 2;
  // estimate
  std::string rho_diag, rho_file;
  int k = 1;
  std::int64_t tensor_cap = kDefaultTensorCap;
  bool direct = false;
  // scan
  std::string rhoA, rhoB;
  double p = 0.5;
  std::string n_list;
  double c0 = 2.0;
  // check
  bool quick = false;
};

int cmd_lr(const Options& o, Format fmt, std::ostream& out) {
  const auto t = triple_args(o.mu, o.nu, o.lambda);
  Json j;
  if (o.method == "tableaux") {
    j = to_json(lr_general(t));
  } else if (o.method == "oracle") {
    j = to_json(lr_character_oracle(t));
  } else {
    const auto fast = lr_general(t);
    const auto slow = lr_character_oracle(t);
    j = to_json(fast);
    j["method"] = "both";
    j["oracle_coefficient"] = slow.coefficient.convert_to<std::int64_t>();
    j["agree"] = fast.coefficient == slow.coefficient;
  }
  if (o.scaling_max > 0) {
    const auto n = find_scaling(t, o.scaling_max);
    j["scaling"] = n ? Json(*n) : Json();
  }
  if (fmt == Format::table) {
    out << "mu " << weights_table(t.mu) << " nu " << weights_table(t.nu) << " lambda " << weights_table(t.lambda)
        << " coefficient " << j["coefficient"].get<std::int64_t>() << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_realize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = triple_args(o.mu, o.nu, o.lambda);
  RealizeConfig config;
  config.restarts = o.restarts;
  config.steps = o.steps;
  const auto result = realize_triple(t, o.tol, config, o.seed);
  Json j = to_json(result);
  j["triple"] = to_json(t);
  out << j.dump() << '\n';
  if (!result.converged) {
    error_record(err, "inconclusive", "budget exhausted; best residual " + std::to_string(result.residual));
    return 1;
  }
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  RealizeConfig config;
  config.restarts = o.restarts;
  config.steps = o.steps;
  out << to_json(verify_theorem1_sweep(o.max_boxes, o.d, o.tol, config, o.seed)).dump() << '\n';
  return 0;
}

int cmd_estimate(const Options& o, Format fmt, std::ostream& out) {
  if (o.rho_diag.empty() == o.rho_file.empty()) throw UsageError("estimate needs exactly one of --rho-diag or --rho-file");
  const DensityOperator rho = density_arg(o.rho_diag.empty() ? o.rho_file : o.rho_diag);
  const auto dist = measurement_distribution(rho, o.k);
  const auto spec = rho.spectrum();
  Json j = to_json(dist, spec);
  if (o.direct) {
    for (std::size_t i = 0; i < dist.outcomes.size(); ++i)
      j["outcomes"][i]["prob_direct"] = projector_trace_direct(rho, dist.outcomes[i].frame, o.tensor_cap);
  }
  if (fmt == Format::json) {
    out << j.dump() << '\n';
    return 0;
  }
  const char sep = fmt == Format::csv ? ',' : ' ';
  if (fmt == Format::csv) out << "frame,prob,bound\n";
  for (const auto& row : j["outcomes"]) {
    std::string frame;
    for (const auto& x : row["frame"]) frame += (frame.empty() ? "" : " ") + std::to_string(x.get<int>());
    std::ostringstream line;
    line << std::setprecision(17) << frame << sep << row["prob"].get<double>() << sep << row["bound"].get<double>();
    out << line.str() << '\n';
  }
  return 0;
}

int cmd_scan(const Options& o, Format fmt, std::ostream& out) {
  const DensityOperator rhoA = density_arg(o.rhoA);
  const DensityOperator rhoB = density_arg(o.rhoB);
  std::vector<int> ns;
  try {
    ns = parse_ints(o.n_list);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto target = ScanTarget::from_operators(rhoA, rhoB, o.p);
  const auto steps = scan(target, ns, o.c0);
  if (fmt == Format::csv) {
    out << scan_csv(steps);
    return 0;
  }
  for (const auto& s : steps) {
    if (!s.witness) continue;
    if (fmt == Format::table) {
      const auto& w = *s.witness;
      out << "n " << w.n << " mu " << weights_table(w.triple.mu) << " nu " << weights_table(w.triple.nu) << " lambda "
          << weights_table(w.triple.lambda) << " c " << w.coefficient << " median " << w.distances.median() << '\n';
    } else {
      out << to_json(*s.witness).dump() << '\n';
    }
  }
  if (fmt == Format::json) out << scan_summary(steps).dump() << '\n';
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto report = run_checks({o.quick, o.seed});
  out << report.json.dump() << '\n';
  return report.passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Littlewood-Richardson coefficients, spectrum estimation and Horn's problem"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", o.workers, "Worker threads (default: HORNLR_WORKERS or all cores)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}))->capture_default_str();
  app.add_option("--out", o.out_path, "Write the report to this file");

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient of a triple");
  lr->add_option("--mu", o.mu)->required();
  lr->add_option("--nu", o.nu)->required();
  lr->add_option("--lambda", o.lambda)->required();
  lr->add_option("--method", o.method)->check(CLI::IsMember({"tableaux", "oracle", "both"}))->capture_default_str();
  lr->add_option("--find-scaling", o.scaling_max, "Smallest N <= N_MAX with nonzero coefficient at N× scale");

  auto* realize = app.add_subcommand("realize", "Hermitian witnesses A, B with prescribed spectra");
  realize->add_option("--mu", o.mu)->required();
  realize->add_option("--nu", o.nu)->required();
  realize->add_option("--lambda", o.lambda)->required();
  realize->add_option("--tol", o.tol)->check(CLI::PositiveNumber)->capture_default_str();
  realize->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  realize->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep-theorem1", "Realize every nonzero-coefficient triple up to a box count");
  sweep->add_option("--max-boxes", o.max_boxes)->check(CLI::NonNegativeNumber)->capture_default_str();
  sweep->add_option("--d", o.d)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--tol", o.tol)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* estimate = app.add_subcommand("estimate", "Schur-Weyl measurement distribution on k copies");
  estimate->add_option("--rho-diag", o.rho_diag, "Diagonal density operator, e.g. 0.5,0.5");
  estimate->add_option("--rho-file", o.rho_file, "JSON matrix file");
  estimate->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  estimate->add_flag("--direct", o.direct, "Also evaluate the explicit tensor-space projectors");
  estimate->add_option("--tensor-cap", o.tensor_cap, "Cap on d^k for --direct")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "Integer witnesses converging to the given spectra");
  scan_cmd->add_option("--rhoA", o.rhoA, "Diagonal or JSON matrix file")->required();
  scan_cmd->add_option("--rhoB", o.rhoB, "Diagonal or JSON matrix file")->required();
  scan_cmd->add_option("--p", o.p)->capture_default_str();
  scan_cmd->add_option("--n-list", o.n_list, "Scales, e.g. 8,16,32")->required();
  scan_cmd->add_option("--c0", o.c0)->check(CLI::PositiveNumber)->capture_default_str();

  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_flag("--quick", o.quick, "Reduced caps");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_record(err, "usage", e.what());
    return 2;
  }

  if (o.workers > 0) {
    set_worker_count(o.workers);
  } else if (const char* env = std::getenv("HORNLR_WORKERS")) {
    try {
      set_worker_count(std::stoi(env));
    } catch (const std::exception&) {
      error_record(err, "usage", "HORNLR_WORKERS must be an integer");
      return 2;
    }
  }

  const Format fmt = o.format == "csv" ? Format::csv : o.format == "table" ? Format::table : Format::json;
  std::ostringstream buffer;
  int code = 0;
  try {
    if (lr->parsed()) code = cmd_lr(o, fmt, buffer);
    else if (realize->parsed()) code = cmd_realize(o, buffer, err);
    else if (sweep->parsed()) code = cmd_sweep(o, buffer);
    else if (estimate->parsed()) code = cmd_estimate(o, fmt, buffer);
    else if (scan_cmd->parsed()) code = cmd_scan(o, fmt, buffer);
    else if (check->parsed()) code = cmd_check(o, buffer);
  } catch (const UsageError& e) {
    error_record(err, "usage", e.what());
    return 2;
  } catch (const ResourceError& e) {
    error_record(err, "resource", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    error_record(err, "domain", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_record(err, "internal", e.what());
    return 1;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      error_record(err, "io", "cannot open " + o.out_path);
      return 1;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace hornlr
