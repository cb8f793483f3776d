// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracspec/fracspec.hpp"

namespace fracspec::cli {

namespace {

using nlohmann::ordered_json;

ordered_json rational_list(std::span<const Rational> xs) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : xs) arr.push_back(x.to_string());
  return arr;
}

ordered_json parameters_json(const SimilaritySet& s) {
  ordered_json doc;
  doc["a"] = rational_list(s.a());
  doc["d"] = rational_list(s.d());
  doc["beta"] = rational_list(s.beta());
  return doc;
}

ordered_json bracket_json(const EigenvalueBracket& b) {
  ordered_json j;
  j["n"] = b.n;
  j["negative"] = b.negative;
  j["lo"] = b.lo.to_string();
  j["hi"] = b.hi.to_string();
  j["status"] = std::string(to_string(b.status));
  if (b.status == BracketStatus::not_found) j["limit"] = b.limit.to_string();
  j["deepest_level"] = b.deepest_level;
  ordered_json log = ordered_json::array();
  for (const auto& rec : b.log) {
    ordered_json r;
    r["lambda"] = rec.lambda.to_string();
    r["m"] = rec.level;
    r["epsilon"] = rec.epsilon.to_string();
    r["lower"] = rec.lower;
    r["upper"] = rec.upper;
    r["conclusive_margin"] = rec.conclusive_margin;
    r["verdict"] = std::string(to_string(rec.verdict));
    log.push_back(std::move(r));
  }
  j["log"] = std::move(log);
  return j;
}

int run_bounds(const RunConfig& c, const SimilaritySet& s, std::ostream& out) {
  BracketOptions opts;
  opts.width_tol = c.width_tol;
  opts.relative_tol = c.relative_tol;
  opts.lambda_max = c.lambda_max;
  opts.m_max = c.m_max;
  opts.size_cap = c.size_cap;

  std::vector<EigenvalueBracket> brackets;
  {
    // One certifier per direction so refined pencils are shared across indices.
    Certifier certifier(c.negative ? reflect(s) : s, c.size_cap);
    for (int n = c.n_first; n <= c.n_last; ++n) {
      EigenvalueBracket b = certifier.bracket(n, opts);
      if (c.negative) mirror_to_negative(b);
      brackets.push_back(std::move(b));
    }
  }

  const bool all_certified = std::all_of(brackets.begin(), brackets.end(), [](const auto& b) {
    return b.status == BracketStatus::certified;
  });

  switch (c.format) {
    case OutputFormat::json: {
      ordered_json doc;
      doc["command"] = "bounds";
      doc["parameters"] = parameters_json(s);
      doc["negative"] = c.negative;
      doc["width_tol"] = c.width_tol.to_string();
      doc["relative_tol"] = c.relative_tol;
      doc["lambda_max"] = c.lambda_max.to_string();
      ordered_json arr = ordered_json::array();
      for (const auto& b : brackets) arr.push_back(bracket_json(b));
      doc["brackets"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,status,lo,hi,lo_approx,hi_approx,deepest_level\n";
      for (const auto& b : brackets) {
        out << (b.negative ? -b.n : b.n) << ',' << to_string(b.status) << ',' << b.lo << ',' << b.hi << ','
            << to_sci_string(b.lo) << ',' << to_sci_string(b.hi) << ',' << b.deepest_level << '\n';
      }
      break;
    case OutputFormat::table:
      for (const auto& b : brackets) {
        out << (b.negative ? "negative " : "") << "n=" << b.n << "  " << to_string(b.status) << "  ["
            << to_sci_string(b.lo) << ", " << to_sci_string(b.hi) << "]  m<=" << b.deepest_level << '\n'
            << "    lo = " << b.lo << "\n    hi = " << b.hi << '\n';
        if (b.status == BracketStatus::not_found) {
          out << "    no eigenvalue with this index up to |lambda| = " << to_sci_string(abs(b.limit)) << '\n';
        }
      }
      break;
  }
  return all_certified ? kExitOk : kExitUncertified;
}

int run_moments(const RunConfig& c, const SimilaritySet& s, std::ostream& out) {
  const MomentData m = moments(s);
  switch (c.format) {
    case OutputFormat::json: {
      ordered_json doc;
      doc["command"] = "moments";
      doc["N"] = s.size();
      doc["theta_sq"] = s.theta_sq().to_string();
      doc["alpha"] = rational_list(s.alpha());
      doc["p0"] = m.p0.to_string();
      doc["p1"] = m.p1.to_string();
      doc["norm_sq"] = m.norm_sq.to_string();
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "quantity,exact,approx\n"
          << "theta_sq," << s.theta_sq() << ',' << to_sci_string(s.theta_sq()) << '\n'
          << "p0," << m.p0 << ',' << to_sci_string(m.p0) << '\n'
          << "p1," << m.p1 << ',' << to_sci_string(m.p1) << '\n'
          << "norm_sq," << m.norm_sq << ',' << to_sci_string(m.norm_sq) << '\n';
      break;
    case OutputFormat::table:
      out << "N        = " << s.size() << '\n'
          << "theta^2  = " << s.theta_sq() << "  (" << to_sci_string(s.theta_sq()) << ")\n"
          << "p0       = " << m.p0 << "  (" << to_sci_string(m.p0) << ")\n"
          << "p1       = " << m.p1 << "  (" << to_sci_string(m.p1) << ")\n"
          << "|P|^2    = " << m.norm_sq << "  (" << to_sci_string(m.norm_sq) << ")\n";
      break;
  }
  return kExitOk;
}

int run_inertia(const RunConfig& c, const SimilaritySet& s, std::ostream& out) {
  const SimilaritySet level = iterate(s, c.level, c.size_cap);
  const TridiagonalSymmetric t = assemble(level, moments(s), c.lambda, c.epsilon);
  if (!c.dump_matrix.empty()) {
    std::ofstream dump(c.dump_matrix);
    if (!dump) throw ValidationError("cannot write matrix dump '" + c.dump_matrix + "'");
    write_csv(dump, t);
  }
  const InertiaResult r = inertia(t);
  switch (c.format) {
    case OutputFormat::json: {
      ordered_json doc;
      doc["command"] = "inertia";
      doc["lambda"] = c.lambda.to_string();
      doc["epsilon"] = c.epsilon.to_string();
      doc["m"] = c.level;
      doc["dim"] = t.dim();
      doc["negatives"] = r.negatives;
      doc["zeros"] = r.zeros;
      doc["positives"] = r.positives;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "lambda,epsilon,m,dim,negatives,zeros,positives\n"
          << c.lambda << ',' << c.epsilon << ',' << c.level << ',' << t.dim() << ',' << r.negatives << ','
          << r.zeros << ',' << r.positives << '\n';
      break;
    case OutputFormat::table:
      out << "lambda = " << c.lambda << ", epsilon = " << c.epsilon << ", m = " << c.level
          << ", dim = " << t.dim() << '\n'
          << "negatives " << r.negatives << "  zeros " << r.zeros << "  positives " << r.positives << '\n';
      break;
  }
  return kExitOk;
}

int run_sample(const RunConfig& c, const SimilaritySet& s, std::ostream& out) {
  const SampledFunction f = sample(s, c.iterations, c.grid, c.size_cap);
  if (c.format == OutputFormat::json) {
    ordered_json doc;
    doc["command"] = "sample";
    doc["iterations"] = c.iterations;
    doc["grid"] = c.grid;
    doc["sup_error_bound"] = f.sup_error_bound;
    doc["l2_error_bound"] = f.l2_error_bound;
    doc["breakpoints"] = rational_list(f.breakpoints);
    doc["values"] = f.values;
    out << doc.dump(2) << '\n';
  } else {
    write_csv(out, f);
  }
  return kExitOk;
}

int run_oracle(const RunConfig& c, const SimilaritySet& s, std::ostream& out) {
  const SimilaritySet target = c.negative ? reflect(s) : s;
  auto estimates = approx_eigenvalues(target, moments(target), c.n_last, c.mesh_level,
                                      to_float(c.lambda_max), c.size_cap);
  std::erase_if(estimates, [&](const OracleEstimate& e) { return e.n < c.n_first; });
  if (c.negative) {
    for (auto& e : estimates) e.value = -e.value;
  }
  switch (c.format) {
    case OutputFormat::json: {
      ordered_json doc;
      doc["command"] = "oracle";
      doc["negative"] = c.negative;
      ordered_json arr = ordered_json::array();
      for (const auto& e : estimates) arr.push_back({{"n", e.n}, {"estimate", e.value}, {"mesh_level", e.mesh_level}});
      doc["estimates"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
    case OutputFormat::table:
      write_csv(out, estimates);
      break;
  }
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_index_range(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ValidationError("malformed index range '" + text + "' (expected A..B)");
    }
    return std::stoi(part);
  };
  int first = 0;
  int last = 0;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    first = parse_int(text.substr(0, dots));
    last = parse_int(text.substr(dots + 2));
  } else {
    first = last = parse_int(text);
  }
  if (first < 1 || last < first) {
    throw ValidationError("index range '" + text + "' must satisfy 1 <= A <= B");
  }
  return {first, last};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.width_tol.sign() <= 0) throw ValidationError("--tol must be > 0");
    if (config.n_first < 1 || config.n_last < config.n_first) throw ValidationError("empty index range");
    const SimilaritySet s = load_parameter_file(config.parameter_file);
    switch (config.command) {
      case Command::bounds: return run_bounds(config, s, out);
      case Command::moments: return run_moments(config, s, out);
      case Command::inertia: return run_inertia(config, s, out);
      case Command::sample: return run_sample(config, s, out);
      case Command::oracle: return run_oracle(config, s, out);
    }
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified eigenvalue bounds for Dirichlet problems with self-similar weights"};
  app.require_subcommand(1);
  RunConfig config;
  std::string n_range = "1";
  std::string tol = "1/100";
  std::string lambda_max = "10000";
  std::string lambda = "1";
  std::string epsilon = "0";
  std::string format = "table";
  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", config.parameter_file, "Parameter set (JSON)")->required();
    sub->add_option("--format", format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--size-cap", config.size_cap, "Maximum number of pieces after refinement");
  };

  auto* bounds = app.add_subcommand("bounds", "Certified brackets for eigenvalues");
  add_common(bounds);
  bounds->add_option("--n", n_range, "Eigenvalue indices, A..B");
  bounds->add_option("--tol", tol, "Bracket width tolerance (scalar literal)");
  bounds->add_flag("--relative-tol", config.relative_tol, "Interpret --tol relative to the lower end");
  bounds->add_option("--lambda-max", lambda_max, "Largest |lambda| searched");
  bounds->add_option("--m-max", config.m_max, "Deepest refinement level (0: limited by size cap)");
  bounds->add_flag("--negative", config.negative, "Bracket negative eigenvalues instead");

  auto* inertia_cmd = app.add_subcommand("inertia", "Inertia of the refined pencil at one lambda");
  add_common(inertia_cmd);
  inertia_cmd->add_option("--lambda", lambda, "Spectral parameter");
  inertia_cmd->add_option("--level", config.level, "Refinement level m");
  inertia_cmd->add_option("--epsilon", epsilon, "Shift epsilon >= 0");
  inertia_cmd->add_option("--dump-matrix", config.dump_matrix, "Write the tridiagonal matrix as CSV");

  auto* moments_cmd = app.add_subcommand("moments", "Exact moments of the self-similar primitive");
  add_common(moments_cmd);

  auto* sample_cmd = app.add_subcommand("sample", "Fixed-point iterate of the primitive as CSV");
  add_common(sample_cmd);
  sample_cmd->add_option("--iterations", config.iterations, "Fixed-point iterations from zero");
  sample_cmd->add_option("--grid", config.grid, "Number of uniform output cells");

  auto* oracle_cmd = app.add_subcommand("oracle", "Floating-point Galerkin estimates (not certified)");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--n", n_range, "Eigenvalue indices, A..B");
  oracle_cmd->add_option("--mesh-level", config.mesh_level, "Refinement level of the Galerkin mesh");
  oracle_cmd->add_option("--lambda-max", lambda_max, "Largest |lambda| searched");
  oracle_cmd->add_flag("--negative", config.negative, "Estimate negative eigenvalues instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*bounds) config.command = Command::bounds;
    if (*inertia_cmd) config.command = Command::inertia;
    if (*moments_cmd) config.command = Command::moments;
    if (*sample_cmd) config.command = Command::sample;
    if (*oracle_cmd) config.command = Command::oracle;
    const auto [first, last] = parse_index_range(n_range);
    config.n_first = first;
    config.n_last = last;
    config.width_tol = parse_scalar(tol);
    config.lambda_max = parse_scalar(lambda_max);
    config.lambda = parse_scalar(lambda);
    config.epsilon = parse_scalar(epsilon);
    config.format = formats.at(format);
    if (config.lambda_max.sign() <= 0) throw ValidationError("--lambda-max must be > 0");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return run(config, out, err);
}

}  // namespace fracspec::cli
