// Copyright 2026 The blockest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace blockest::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t line;
};

std::string located(std::string_view source, std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ": " << msg;
  return os.str();
}

std::optional<double> to_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Complex> to_complex(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    const std::string_view inner = s.substr(1, s.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    const auto re = to_double(inner.substr(0, comma));
    const auto im = to_double(inner.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return Complex(*re, *im);
  }
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i' && s.back() != 'j') {
    const auto re = to_double(s);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split before the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) -> std::optional<double> {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return to_double(t);
  };
  if (split == std::string_view::npos) {
    const auto im = imag_part(body);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  const auto re = to_double(body.substr(0, split));
  const auto im = imag_part(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, path.string() + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PauliSum load_pauli_sum(const std::filesystem::path& path, const char* role) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, path.string() + ": cannot open " + role + " file");
  PauliSum s = PauliSum::parse(in, path.string());
  if (s.qubits() > kMaxQubits) {
    fail(ErrorCode::kValidationError,
         path.string() + ": " + std::to_string(s.qubits()) + " qubits exceeds the limit of " +
             std::to_string(kMaxQubits));
  }
  return s;
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    fail(ErrorCode::kValidationError, std::string(name) + " must lie in (0,1)");
  }
}

double rounded(double x) { return std::stod(format_number(x)); }

Json number(double x) {
  if (!std::isfinite(x)) return Json(nullptr);
  return Json(rounded(x));
}

Json report_json(const ComplexityReport& r) {
  Json j;
  j["algorithm"] = r.algorithm;
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = number(v);
  Json breakdown = Json::object();
  for (const auto& [k, v] : r.breakdown) breakdown[k] = number(v);
  j["inputs"] = inputs;
  j["breakdown"] = breakdown;
  j["total"] = number(r.total);
  return j;
}

Json estimate_json(const EstimationResult& r) {
  Json j;
  j["value_re"] = number(r.value.real());
  j["value_im"] = number(r.value.imag());
  j["eps"] = number(r.target_eps);
  j["delta"] = number(r.delta);
  j["grover_queries"] = r.grover_queries;
  j["mode"] = to_string(r.mode);
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return j;
}

ComplexMatrix density_weight(const Inputs& in, Command command) {
  const auto d = static_cast<Eigen::Index>(in.hamiltonian->dimension());
  if (command == Command::kDos) {
    return ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  }
  return reduced_density(*in.state);
}

SketchRequest build_request(const RunConfig& config, const Inputs& in, Command command) {
  SketchRequest req{*in.hamiltonian};
  switch (command) {
    case Command::kLdos:
      req.kind = SketchKind::kLdos;
      break;
    case Command::kResponse:
      req.kind = SketchKind::kResponse;
      break;
    default:
      req.kind = SketchKind::kDos;
  }
  if (req.kind != SketchKind::kDos) {
    if (!in.state) fail(ErrorCode::kValidationError, "--state is required for this command");
    req.state = in.state;
  }
  if (req.kind == SketchKind::kResponse) {
    if (!in.b_op || !in.c_op) {
      fail(ErrorCode::kValidationError, "--b and --c are required for response");
    }
    req.b_op = in.b_op;
    req.c_op = in.c_op;
  }
  if (config.moments.has_value() == config.interval.has_value()) {
    fail(ErrorCode::kValidationError, "give exactly one of --integral and --moments");
  }
  if (config.interval) req.interval = config.interval;
  if (config.moments) req.moments = *config.moments;
  req.eps = config.eps;
  req.delta = config.delta;
  req.rho_max = config.rho_max;
  req.allow_small_eta = config.allow_small_eta;
  return req;
}

CorrelationSpec build_correlation(const RunConfig& config, const Inputs& in) {
  if (!in.state) fail(ErrorCode::kValidationError, "--state is required for correlate");
  if (in.observables.empty()) {
    fail(ErrorCode::kValidationError, "correlate needs at least one --observable");
  }
  return CorrelationSpec{*in.hamiltonian, in.observables, *in.state, config.eps, config.delta};
}

void run_correlate(const RunConfig& config, const Inputs& in, std::ostream& out) {
  const CorrelationSpec spec = build_correlation(config, in);
  const CorrelationResult r = correlate(spec, config.mode, config.seed);
  Json j;
  j["command"] = "correlate";
  const Json estimate = estimate_json(r.estimate);
  for (const auto& [k, v] : estimate.items()) j[k] = v;
  j["gamma"] = number(r.gamma);
  j["evolution_accuracy"] = number(r.evolution_accuracy);
  j["composed_accuracy"] = number(r.composed_accuracy);
  j["encoding_cost"] = r.encoding_cost;
  if (config.emit_oracle) {
    const Complex o =
        oracle_correlation(*in.hamiltonian, in.observables, reduced_density(*in.state));
    j["oracle_re"] = number(o.real());
    j["oracle_im"] = number(o.imag());
  }
  j["cost_report"] = report_json(r.report);
  out << j.dump(2) << '\n';
}

void run_sketch(const RunConfig& config, const Inputs& in, std::ostream& out) {
  const SketchRequest req = build_request(config, in, config.command);
  const SketchResult r = sketch(req, config.mode, config.seed);
  const bool response = req.kind == SketchKind::kResponse;
  const PauliSum& h = *in.hamiltonian;
  const double alpha = h.scale();

  if (req.interval) {
    const WindowSummary& w = *r.window_meta;
    out << "# interval a=" << format_number(req.interval->first)
        << " b=" << format_number(req.interval->second) << '\n';
    out << "# window a_bar=" << format_number(w.a_bar) << " b_bar=" << format_number(w.b_bar)
        << " eta_rel=" << format_number(w.eta_rel) << " n=" << w.jackson_degree
        << " k=" << w.amplifier_order << " tau=" << format_number(w.tau) << " d=" << w.degree
        << '\n';
    if (!config.emit_oracle) {
      out << "n,value_re,value_im,queries\n";
    } else if (response) {
      out << "n,value_re,value_im,queries,oracle_re,oracle_im,oracle_sharp_re,oracle_sharp_im\n";
    } else {
      out << "n,value_re,value_im,queries,oracle,oracle_sharp\n";
    }
    const EstimationResult& v = r.values.front();
    std::vector<std::string> cells{"0", format_number(v.value.real()),
                                   format_number(v.value.imag()),
                                   std::to_string(v.grover_queries)};
    if (config.emit_oracle) {
      // The windowed spectral sum is what the circuit estimates; the sharp
      // indicator sum is the target it approximates.
      const HermitianEigen eig = eig_hermitian(pauli_sum_matrix(h));
      const ComplexMatrix wm =
          apply_spectral(eig, [&](double e) { return Complex(w.poly(e / alpha), 0.0); });
      if (response) {
        const ComplexMatrix rho = reduced_density(*in.state);
        const Complex windowed =
            (rho * pauli_sum_matrix(*in.b_op) * wm * pauli_sum_matrix(*in.c_op)).trace();
        const Complex sharp = oracle_response(h, *in.b_op, *in.c_op, rho,
                                              ResponseQuery::integral(req.interval->first,
                                                                      req.interval->second));
        cells.push_back(format_number(windowed.real()));
        cells.push_back(format_number(windowed.imag()));
        cells.push_back(format_number(sharp.real()));
        cells.push_back(format_number(sharp.imag()));
      } else {
        const ComplexMatrix weight = density_weight(in, config.command);
        const double windowed = (weight * wm).trace().real();
        const double sharp =
            req.kind == SketchKind::kDos
                ? oracle_dos_integral(h, req.interval->first, req.interval->second)
                : oracle_dos_integral(h, req.interval->first, req.interval->second, weight);
        cells.push_back(format_number(windowed));
        cells.push_back(format_number(sharp));
      }
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
    return;
  }

  if (!config.emit_oracle) {
    out << "n,value_re,value_im,queries\n";
  } else if (response) {
    out << "n,value_re,value_im,queries,oracle_re,oracle_im\n";
  } else {
    out << "n,value_re,value_im,queries,oracle\n";
  }
  std::vector<double> mu;
  if (config.emit_oracle && !response) {
    mu = oracle_moments(h, alpha, req.moments, density_weight(in, config.command));
  }
  ComplexMatrix rho;
  if (config.emit_oracle && response) rho = reduced_density(*in.state);
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    const EstimationResult& v = r.values[i];
    const std::size_t n = r.chebyshev_orders[i];
    out << n << ',' << format_number(v.value.real()) << ',' << format_number(v.value.imag())
        << ',' << v.grover_queries;
    if (config.emit_oracle) {
      if (response) {
        const Complex o =
            oracle_response(h, *in.b_op, *in.c_op, rho, ResponseQuery::moment(n, alpha));
        out << ',' << format_number(o.real()) << ',' << format_number(o.imag());
      } else {
        out << ',' << format_number(mu[n]);
      }
    }
    out << '\n';
  }
}

void run_kpm(const RunConfig& config, const Inputs& in, std::ostream& out) {
  if (!config.moments) fail(ErrorCode::kValidationError, "kpm needs --moments");
  if (config.interval) fail(ErrorCode::kValidationError, "kpm does not take --integral");
  if (config.grid_points == 0) fail(ErrorCode::kValidationError, "--grid must be positive");
  const Command kind = in.state ? Command::kLdos : Command::kDos;
  const SketchRequest req = build_request(config, in, kind);
  std::vector<double> grid(config.grid_points);
  const double m = static_cast<double>(config.grid_points);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    grid[j] = -1.0 + (2.0 * static_cast<double>(j) + 1.0) / m;
  }
  const KpmSketch k = kpm_sketch(req, grid, config.mode, config.seed);
  out << "x,f_kpm\n";
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out << format_number(grid[j]) << ',' << format_number(k.reconstruction[j]) << '\n';
  }
}

void run_window_poly(const RunConfig& config, std::ostream& out) {
  const WindowPoly w =
      window_poly(config.window_a, config.window_b, config.window_eta, config.allow_small_eta);
  const WindowCertificate& c = w.certificate;
  out << "# a_bar=" << format_number(w.a_bar) << " b_bar=" << format_number(w.b_bar)
      << " eta_rel=" << format_number(w.eta_rel) << " n=" << w.jackson_degree
      << " k=" << w.amplifier_order << " tau=" << format_number(w.tau) << " d=" << w.degree()
      << '\n';
  out << "# certification grid_points=" << c.grid_points
      << " max_abs=" << format_number(c.max_abs) << " inside_min=" << format_number(c.inside_min)
      << " outside_max=" << format_number(c.outside_max)
      << " outside_min=" << format_number(c.outside_min)
      << " form_mismatch=" << format_number(c.form_mismatch)
      << " max_violation=" << format_number(c.max_violation) << '\n';
  if (config.summary_only) return;
  out << "k,coeff\n";
  const auto& coeffs = w.poly.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out << k << ',' << format_number(coeffs[k]) << '\n';
  }
}

void run_cost(const RunConfig& config, const Inputs& in, std::ostream& out) {
  ComplexityReport r;
  if (config.cost_kind == "correlation") {
    r = complexity_report(build_correlation(config, in));
  } else {
    Command kind = Command::kDos;
    if (config.cost_kind == "ldos") kind = Command::kLdos;
    if (config.cost_kind == "response") kind = Command::kResponse;
    r = complexity_report(build_request(config, in, kind));
  }
  out << report_json(r).dump(2) << '\n';
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

PreparationUnitary parse_state(std::string_view text, std::string_view source,
                               std::size_t system_dim, const PauliSum* hamiltonian) {
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) tokens.push_back({tok, line_no});
    start = end + 1;
  }
  if (tokens.empty()) fail(ErrorCode::kParseError, located(source, line_no, "empty state file"));

  const Token& kind = tokens.front();
  const std::size_t args = tokens.size() - 1;
  auto expect_args = [&](std::size_t n) {
    if (args != n) {
      fail(ErrorCode::kParseError,
           located(source, kind.line,
                   "'" + kind.text + "' takes " + std::to_string(n) + " argument(s)"));
    }
  };

  if (kind.text == "mixed") {
    expect_args(0);
    return prepare_maximally_mixed(system_dim);
  }
  if (kind.text == "basis") {
    expect_args(1);
    const Token& t = tokens[1];
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), index);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(ErrorCode::kParseError, located(source, t.line, "bad basis index '" + t.text + "'"));
    }
    if (index >= system_dim) {
      fail(ErrorCode::kValidationError,
           located(source, t.line,
                   "basis index " + t.text + " outside dimension " + std::to_string(system_dim)));
    }
    return prepare_basis(system_dim, index);
  }
  if (kind.text == "thermal") {
    expect_args(1);
    const Token& t = tokens[1];
    const auto beta = to_double(t.text);
    if (!beta) fail(ErrorCode::kParseError, located(source, t.line, "bad beta '" + t.text + "'"));
    if (*beta < 0.0) {
      fail(ErrorCode::kValidationError, located(source, t.line, "beta must be nonnegative"));
    }
    if (hamiltonian == nullptr) {
      fail(ErrorCode::kValidationError,
           located(source, kind.line, "thermal state needs a Hamiltonian"));
    }
    return prepare_thermal(*hamiltonian, *beta).preparation;
  }
  if (kind.text == "pure") {
    if (args != system_dim) {
      fail(ErrorCode::kValidationError,
           located(source, kind.line,
                   "expected " + std::to_string(system_dim) + " amplitudes, got " +
                       std::to_string(args)));
    }
    ComplexVector v(static_cast<Eigen::Index>(system_dim));
    for (std::size_t i = 0; i < system_dim; ++i) {
      const Token& t = tokens[i + 1];
      const auto c = to_complex(t.text);
      if (!c) fail(ErrorCode::kParseError, located(source, t.line, "bad amplitude '" + t.text + "'"));
      v(static_cast<Eigen::Index>(i)) = *c;
    }
    if (std::abs(v.norm() - 1.0) > 1e-10) {
      std::ostringstream os;
      os << "amplitudes have norm " << std::setprecision(12) << v.norm() << ", expected 1";
      fail(ErrorCode::kValidationError, located(source, kind.line, os.str()));
    }
    return prepare_pure(v);
  }
  fail(ErrorCode::kParseError,
       located(source, kind.line,
               "unknown state kind '" + kind.text + "' (expected pure, mixed, thermal or basis)"));
}

Inputs parse_inputs(const RunConfig& config) {
  Inputs in;
  if (config.hamiltonian) in.hamiltonian = load_pauli_sum(*config.hamiltonian, "Hamiltonian");
  const std::size_t qubits = in.hamiltonian ? in.hamiltonian->qubits() : 0;
  auto check_dims = [&](const PauliSum& s, const std::filesystem::path& path) {
    if (in.hamiltonian && s.qubits() != qubits) {
      fail(ErrorCode::kValidationError,
           path.string() + ": acts on " + std::to_string(s.qubits()) +
               " qubits but the Hamiltonian acts on " + std::to_string(qubits));
    }
  };
  for (const ObservableArg& o : config.observables) {
    PauliSum s = load_pauli_sum(o.path, "observable");
    check_dims(s, o.path);
    in.observables.push_back({std::move(s), o.time});
  }
  if (config.b_op) {
    in.b_op = load_pauli_sum(*config.b_op, "operator");
    check_dims(*in.b_op, *config.b_op);
  }
  if (config.c_op) {
    in.c_op = load_pauli_sum(*config.c_op, "operator");
    check_dims(*in.c_op, *config.c_op);
  }
  if (config.state) {
    if (!in.hamiltonian) fail(ErrorCode::kValidationError, "--state needs --hamiltonian");
    in.state = parse_state(read_file(*config.state), config.state->string(),
                           in.hamiltonian->dimension(), &*in.hamiltonian);
  }
  return in;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_unit_interval(config.eps, "--eps");
    check_unit_interval(config.delta, "--delta");
    if (!(config.rho_max > 0.0)) fail(ErrorCode::kValidationError, "--rho-max must be positive");
    if (config.moments && *config.moments > kMaxMoments) {
      fail(ErrorCode::kValidationError,
           "--moments " + std::to_string(*config.moments) + " exceeds " +
               std::to_string(kMaxMoments));
    }
    if (config.command != Command::kWindowPoly && !config.hamiltonian) {
      fail(ErrorCode::kValidationError, "--hamiltonian is required");
    }
    const Inputs in = parse_inputs(config);

    std::ostringstream buffer;
    switch (config.command) {
      case Command::kCorrelate:
        run_correlate(config, in, buffer);
        break;
      case Command::kDos:
      case Command::kLdos:
      case Command::kResponse:
        run_sketch(config, in, buffer);
        break;
      case Command::kKpm:
        run_kpm(config, in, buffer);
        break;
      case Command::kWindowPoly:
        run_window_poly(config, buffer);
        break;
      case Command::kCost:
        run_cost(config, in, buffer);
        break;
    }
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) {
        fail(ErrorCode::kValidationError, config.output->string() + ": cannot open for writing");
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "blockest: " << e.what() << '\n';
    return e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kValidationError ? 2 : 3;
  } catch (const std::exception& e) {
    err << "blockest: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("BLOCKEST_SEED")) {
    const std::string_view s(env);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      err << "blockest: BLOCKEST_SEED must be a nonnegative integer\n";
      return 2;
    }
    config.seed = seed;
  }

  CLI::App app{"Block-encoding estimators for correlation functions, densities of states and "
               "linear response, simulated classically.",
               "blockest"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand and flag");
  app.footer("Default seed: BLOCKEST_SEED environment variable, else 0.");

  std::string mode = "sampled";
  std::vector<double> interval;
  std::vector<std::string> observables;
  std::size_t moments = 0;
  std::string hamiltonian, state, b_path, c_path, output;

  auto estimation_flags = [&](CLI::App* sub) {
    sub->add_option("--eps", config.eps, "Target precision in (0,1)")->capture_default_str();
    sub->add_option("--delta", config.delta, "Failure probability in (0,1)")
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "Random seed for sampled mode");
    sub->add_option("--mode", mode, "Estimation mode")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
  };
  auto output_flag = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "Write results to this file instead of stdout");
  };
  auto hamiltonian_flag = [&](CLI::App* sub) {
    sub->add_option("--hamiltonian", hamiltonian, "Pauli-sum file")->required();
  };
  auto sketch_flags = [&](CLI::App* sub) {
    auto* integral = sub->add_option("--integral", interval, "Integrate the density over [a,b]")
                         ->expected(2)
                         ->allow_extra_args(false);
    auto* mom = sub->add_option("--moments", moments, "Chebyshev moments 0..N");
    integral->excludes(mom);
    sub->add_option("--rho-max", config.rho_max, "Bound on the spectral density; sets the window precision")
        ->capture_default_str();
    sub->add_flag("--allow-small-eta", config.allow_small_eta,
                  "Permit window polynomials with eta below 0.02");
  };

  CLI::App* correlate_cmd = app.add_subcommand("correlate", "n-time correlation function");
  hamiltonian_flag(correlate_cmd);
  correlate_cmd->add_option("--observable", observables, "Observable as FILE or FILE@TIME")
      ->required();
  correlate_cmd->add_option("--state", state, "State file")->required();
  correlate_cmd->add_flag("--oracle", config.emit_oracle, "Also report the dense-matrix value");
  estimation_flags(correlate_cmd);
  output_flag(correlate_cmd);

  CLI::App* dos_cmd = app.add_subcommand("dos", "Density of states integral or moments");
  CLI::App* ldos_cmd = app.add_subcommand("ldos", "Local density of states for a site state");
  CLI::App* response_cmd = app.add_subcommand("response", "Linear response <B f(H) C>");
  for (CLI::App* sub : {dos_cmd, ldos_cmd, response_cmd}) {
    hamiltonian_flag(sub);
    sketch_flags(sub);
    sub->add_flag("--oracle", config.emit_oracle, "Add dense-matrix reference columns");
    estimation_flags(sub);
    output_flag(sub);
  }
  ldos_cmd->add_option("--state", state, "Site state file")->required();
  response_cmd->add_option("--state", state, "System state file")->required();
  response_cmd->add_option("--b", b_path, "Pauli-sum file for B")->required();
  response_cmd->add_option("--c", c_path, "Pauli-sum file for C")->required();

  CLI::App* kpm_cmd = app.add_subcommand("kpm", "Kernel-polynomial reconstruction from moments");
  hamiltonian_flag(kpm_cmd);
  kpm_cmd->add_option("--moments", moments, "Chebyshev moments 0..N")->required();
  kpm_cmd->add_option("--state", state, "Site state file (LDOS); omit for the DOS");
  kpm_cmd->add_option("--grid", config.grid_points, "Number of grid points in (-1,1)")
      ->capture_default_str();
  estimation_flags(kpm_cmd);
  output_flag(kpm_cmd);

  CLI::App* window_cmd = app.add_subcommand("window-poly", "Build and certify a window polynomial");
  window_cmd->add_option("--a", config.window_a, "Lower window edge in (-1,1)")->required();
  window_cmd->add_option("--b", config.window_b, "Upper window edge in (-1,1)")->required();
  window_cmd->add_option("--eta", config.window_eta, "Relative precision eta in (0,1)")
      ->capture_default_str();
  window_cmd->add_flag("--allow-small-eta", config.allow_small_eta,
                       "Permit eta below 0.02");
  window_cmd->add_flag("--summary-only", config.summary_only, "Omit the coefficient rows");
  output_flag(window_cmd);

  CLI::App* cost_cmd = app.add_subcommand("cost", "Complexity report with unit constants");
  cost_cmd->add_option("--kind", config.cost_kind, "Algorithm")
      ->check(CLI::IsMember({"correlation", "dos", "ldos", "response"}))
      ->capture_default_str();
  hamiltonian_flag(cost_cmd);
  cost_cmd->add_option("--observable", observables, "Observable as FILE or FILE@TIME");
  cost_cmd->add_option("--state", state, "State file");
  cost_cmd->add_option("--b", b_path, "Pauli-sum file for B");
  cost_cmd->add_option("--c", c_path, "Pauli-sum file for C");
  sketch_flags(cost_cmd);
  estimation_flags(cost_cmd);
  output_flag(cost_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "correlate") config.command = Command::kCorrelate;
  if (name == "dos") config.command = Command::kDos;
  if (name == "ldos") config.command = Command::kLdos;
  if (name == "response") config.command = Command::kResponse;
  if (name == "kpm") config.command = Command::kKpm;
  if (name == "window-poly") config.command = Command::kWindowPoly;
  if (name == "cost") config.command = Command::kCost;

  config.mode = mode == "exact" ? EstimationMode::kExact : EstimationMode::kSampled;
  if (!hamiltonian.empty()) config.hamiltonian = hamiltonian;
  if (!state.empty()) config.state = state;
  if (!b_path.empty()) config.b_op = b_path;
  if (!c_path.empty()) config.c_op = c_path;
  if (!output.empty()) config.output = output;
  if (interval.size() == 2) config.interval = std::pair{interval[0], interval[1]};
  if (const CLI::Option* m = chosen->get_option_no_throw("--moments"); m && m->count() > 0) {
    config.moments = moments;
  }
  for (const std::string& o : observables) {
    ObservableArg arg;
    const auto at = o.rfind('@');
    if (at == std::string::npos) {
      arg.path = o;
    } else {
      arg.path = o.substr(0, at);
      const auto t = to_double(std::string_view(o).substr(at + 1));
      if (!t || !std::isfinite(*t)) {
        err << "blockest: ValidationError: bad observation time in '" << o << "'\n";
        return 2;
      }
      arg.time = *t;
    }
    config.observables.push_back(std::move(arg));
  }
  return run(config, out, err);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace blockest::cli
