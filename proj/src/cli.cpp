#include "rhp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rhp/errors.hpp"
#include "rhp/properties.hpp"
#include "rhp/trace_export.hpp"
#include "rhp/tuple_io.hpp"

namespace rhp {

RunConfig default_run_config() {
  RunConfig config;
  if (const char* env = std::getenv("RHP_STEP_BOUND")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      config.step_bound = v;
    } catch (const std::exception&) {
      throw InvalidSpec(std::string("RHP_STEP_BOUND must be a positive integer, got '") + env + "'");
    }
  }
  return config;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ParseError("matrix needs \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) throw ParseError("bad dim");
  const auto dim = j["dim"].get<Eigen::Index>();
  const auto& rows = j["entries"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw ParseError("entries must have dim rows");
  }
  DenseMatrix<BigInt> m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError("row " + std::to_string(r) + " must have dim entries");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (e.is_number_integer()) {
        m(r, c) = BigInt(e.get<long long>());
      } else if (e.is_string()) {
        try {
          m(r, c) = BigInt(e.get<std::string>());
        } catch (const std::exception&) {
          throw ParseError("entry '" + e.get<std::string>() + "' is not an integer");
        }
      } else {
        throw ParseError("entries must be integers");
      }
    }
  }
  return IntMatrix(std::move(m));
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return matrix_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

std::string signed_str(const BigInt& v) {
  std::ostringstream os;
  if (v > 0) os << '+';
  os << v;
  return os.str();
}

bool report_dm(const IntMatrix& m, int k, std::ostream& out) {
  const auto sides = dodgson_muir_sides(m, k);
  out << "k = " << k << "\n";
  for (const auto& t : sides.per_sigma) {
    out << "  sigma " << t.sigma.to_string() << "  " << signed_str(t.product) << "\n";
  }
  const bool ok = sides.lhs == sides.rhs;
  out << "  lhs = " << sides.lhs << "\n";
  out << "  rhs = " << sides.rhs << "\n";
  out << "  " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

}  // namespace

int cmd_verify_dm(const IntMatrix& m, std::optional<int> k, std::ostream& out) {
  const int dim = static_cast<int>(m.dim());
  if (k && (*k < 1 || *k > dim)) throw InvalidSpec("k must be in 1.." + std::to_string(dim));
  bool ok = true;
  for (int kk = k.value_or(1); kk <= k.value_or(dim); ++kk) ok = report_dm(m, kk, out) && ok;
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFail;
}

IntMatrix random_matrix(int dim, std::uint64_t seed) {
  // explicit mapping so the entries do not depend on the standard library
  std::mt19937_64 gen(seed);
  DenseMatrix<BigInt> m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = BigInt(static_cast<long long>(gen() % 19) - 9);
  }
  return IntMatrix(std::move(m));
}

int cmd_verify_dm_random(int dim, std::optional<int> k, int trials, std::uint64_t seed, std::ostream& out) {
  if (dim < 1) throw InvalidSpec("matrix size must be positive");
  if (trials < 1) throw InvalidSpec("trials must be positive");
  if (k && (*k < 1 || *k > dim)) throw InvalidSpec("k must be in 1.." + std::to_string(dim));
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto m = random_matrix(dim, seed + static_cast<std::uint64_t>(t));
    for (int kk = k.value_or(1); kk <= k.value_or(dim); ++kk) {
      const auto sides = dodgson_muir_sides(m, kk);
      if (sides.lhs != sides.rhs) {
        ++failures;
        out << "trial " << t << " k = " << kk << ": lhs " << sides.lhs << " rhs " << sides.rhs << "\n";
      }
    }
  }
  out << trials << " random " << dim << "x" << dim << " matrices, seed " << seed << ": "
      << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kExitOk : kExitFail;
}

int cmd_bijection(const ForestTuple& tuple, bool forward, bool emit_trace, const RunConfig& config,
                  std::ostream& out) {
  DriverOptions options;
  options.step_bound = config.step_bound;
  auto [result, trace] = forward ? garsia_milne_forward(tuple, options) : garsia_milne_backward(tuple, options);
  out << dump_tuple(result) << "\n";
  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    std::ofstream f(config.output_dir / "result.json");
    f << dump_tuple(result) << "\n";
    if (!f) throw Error("cannot write " + (config.output_dir / "result.json").string());
    if (emit_trace) write_trace(trace, config.output_dir);
  }
  return kExitOk;
}

int cmd_enumerate(int n, int k, const std::string& which, bool count_only, const RunConfig& config,
                  std::ostream& out) {
  if (which == "forbidden") {
    if (count_only) {
      const auto census = forbidden_census(n, k, config.enumeration_cap);
      nlohmann::ordered_json j;
      j["n"] = n;
      j["k"] = k;
      j["set"] = "forbidden";
      j["count"] = census.forbidden;
      j["forest_tuples"] = census.forest_tuples;
      nlohmann::ordered_json per;
      for (const auto& [sigma, c] : census.per_sigma) per[sigma.to_string()] = c;
      j["per_sigma"] = per;
      out << j.dump() << "\n";
    } else {
      for_each_forbidden(n, k, [&](const ForestTuple& t) { out << dump_tuple(t) << "\n"; },
                         config.enumeration_cap);
    }
    return kExitOk;
  }
  const auto set = parse_set_name(which);
  if (!set || *set == SetName::Invalid) throw InvalidSpec("unknown set '" + which + "'");
  if (count_only) {
    std::uint64_t count = 0;
    for_each_in_set(n, k, *set, [&](const ForestTuple&) { ++count; }, config.enumeration_cap);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["set"] = to_string(*set);
    j["count"] = count;
    out << j.dump() << "\n";
  } else {
    for_each_in_set(n, k, *set, [&](const ForestTuple& t) { out << dump_tuple(t) << "\n"; },
                    config.enumeration_cap);
  }
  return kExitOk;
}

int cmd_verify_all(int n, int k, const RunConfig& config, std::ostream& out) {
  check_instance(n, k, config.enumeration_cap);
  std::vector<CheckResult> rows;

  CheckResult tree{"matrix-tree", true, 0, {}};
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<NodeId> roots;
    for (NodeId v = 0; v <= n; ++v) {
      if (mask & (1u << v)) roots.push_back(v);
    }
    ++tree.checked;
    if (!matrix_tree_check(n, roots) && tree.passed) {
      tree.passed = false;
      tree.detail = "root set of size " + std::to_string(roots.size());
    }
  }
  rows.push_back(tree);

  CheckResult cancel{"cancellation", cancellation_check(n, k, config.enumeration_cap), 1, {}};
  rows.push_back(cancel);

  const auto sides = gendodgson_sides(n, k);
  rows.push_back({"laplacian-dodgson-muir", sides.lhs == sides.rhs, 1, {}});

  DriverOptions options;
  options.step_bound = config.step_bound;
  rows.push_back(check_bijection(n, k, options, config.enumeration_cap));
  for (auto& r : involution_suite(n, k, config.enumeration_cap)) rows.push_back(std::move(r));

  bool ok = true;
  out << "n = " << n << ", k = " << k << "\n";
  for (const auto& r : rows) {
    ok = ok && r.passed;
    out << "  " << std::left << std::setw(24) << r.name << std::setw(6) << (r.passed ? "PASS" : "FAIL")
        << r.checked << " checked";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFail;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Red Hot Potato bijection and Dodgson/Muir identity checks", "rhp"};
  app.require_subcommand(1);

  std::string matrix_path, in_path, mode = "exact", direction = "forward", which = "S0", out_dir;
  int n = 0, k = 0, trials = 10;
  std::uint64_t seed = 1;
  bool count_only = false, trace = false;

  auto* dm = app.add_subcommand("verify-dm", "check the Dodgson/Muir identity on an integer matrix");
  dm->add_option("--matrix", matrix_path, "matrix JSON file (exact mode)");
  dm->add_option("--k", k, "block size; every k when omitted");
  dm->add_option("--mode", mode)->check(CLI::IsMember({"exact", "random-trials"}));
  dm->add_option("--n", n, "matrix size (random-trials mode)");
  dm->add_option("--trials", trials);
  dm->add_option("--seed", seed);

  auto* bij = app.add_subcommand("bijection", "map S0 to S3 (or back) and optionally trace it");
  bij->add_option("--in", in_path, "tuple JSON file")->required();
  bij->add_option("--direction", direction)->check(CLI::IsMember({"forward", "backward"}));
  bij->add_flag("--trace", trace, "write DOT snapshots and trace.json (needs --out)");
  bij->add_option("--out", out_dir);

  auto* en = app.add_subcommand("enumerate", "list or count a signed set");
  en->add_option("--n", n)->required();
  en->add_option("--k", k)->required();
  en->add_option("--set", which)->check(CLI::IsMember({"S0", "S1", "S2", "S3", "forbidden"}));
  en->add_flag("--count-only", count_only);

  auto* all = app.add_subcommand("verify-all", "run every check at one (n, k)");
  all->add_option("--n", n)->required();
  all->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config = default_run_config();
    config.seed = seed;
    const std::optional<int> k_opt = k > 0 ? std::optional<int>(k) : std::nullopt;
    if (*dm) {
      if (mode == "random-trials") {
        if (n < 1) throw InvalidSpec("--mode random-trials needs --n");
        return cmd_verify_dm_random(n, k_opt, trials, seed, out);
      }
      if (matrix_path.empty()) throw InvalidSpec("--mode exact needs --matrix");
      return cmd_verify_dm(read_matrix_file(matrix_path), k_opt, out);
    }
    if (*bij) {
      if (trace && out_dir.empty()) throw InvalidSpec("--trace needs --out DIR");
      config.output_dir = out_dir;
      return cmd_bijection(read_tuple_file(in_path), direction == "forward", trace, config, out);
    }
    if (*en) {
      config.format = count_only ? OutputFormat::Count : OutputFormat::Json;
      return cmd_enumerate(n, k, which, count_only, config, out);
    }
    return cmd_verify_all(n, k, config, out);
  } catch (const NonTermination& e) {
    err << e.what() << "\n";
    return kExitFail;
  } catch (const MalformedState& e) {
    err << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rhp
