// Copyright 2026 The entshare Authors
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

#include "entshare/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "entshare/audit.h"
#include "entshare/channel_io.h"
#include "entshare/choi.h"
#include "entshare/optimize.h"

namespace entshare {
namespace {

using nlohmann::json;

class InvalidChannel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_cptp(const KrausChannel& c) {
  const ValidationReport v = validate(c);
  if (!v.ok) {
    throw InvalidChannel("channel is not CPTP: tp_residual=" + format_double(v.tp_residual) +
                         " cp_min_eigenvalue=" + format_double(v.cp_min_eigenvalue));
  }
}

KrausChannel::Params parse_params(const std::vector<std::string>& items,
                                  std::vector<std::string>* bare = nullptr) {
  KrausChannel::Params out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (bare == nullptr) throw SpecError("--param expects k=v, got '" + item + "'");
      bare->push_back(item);
      continue;
    }
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (key.empty() || ec != std::errc() || end != text.data() + text.size()) {
      throw SpecError("cannot parse parameter '" + item + "'");
    }
    out[key] = value;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw SpecError("cannot write '" + path + "'");
  file << text;
}

std::string describe(const KrausChannel& c) {
  std::string out = c.label().empty() ? "kraus" : c.label();
  if (!c.params().empty()) {
    out += " {";
    bool first = true;
    for (const auto& [k, v] : c.params()) {
      out += (first ? "" : ", ") + k + "=" + format_double(v);
      first = false;
    }
    out += "}";
  }
  return out;
}

std::string format_vector(const Vec4& v) {
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    out += (i ? ", " : "") + format_double(v(i).real());
    const double im = v(i).imag();
    out += (im < 0 || std::signbit(im) ? " - " : " + ") + format_double(std::abs(im)) + "i";
  }
  return out + "]";
}

// Per-row quantities, computed on first use.
class RowEvaluator {
 public:
  explicit RowEvaluator(KrausChannel c) : c_(std::move(c)) {}

  std::optional<double> column(const std::string& name) {
    if (name == "F_lambda") return fraction().value;
    if (name == "raw_lambda_max") return fraction().raw_lambda_max;
    if (name == "f_tel") return teleportation_fidelity(fraction().value);
    if (name == "N_choi") return negativity(choi(c_).matrix());
    if (name == "N_channel") return channel_negativity(c_).value;
    if (name == "N_opt_input") return negativity_at_input(c_, input().psi0);
    if (name == "F1") return preprocessed_fidelity(c_);
    if (name == "fstar_phi_plus") return fstar(choi(c_).matrix());
    if (name == "gap") {
      const ChoiGap g = choi_state_gap(c_);
      if (!g.defined) return std::nullopt;
      return g.gap;
    }
    if (name == "schmidt_lambda") return input().schmidt.lambda();
    if (name == "unital_deviation") return is_unital(c_).deviation;
    throw SpecError("unknown column '" + name + "'");
  }

 private:
  const OptimalFraction& fraction() {
    if (!fraction_) fraction_ = optimal_singlet_fraction(c_);
    return *fraction_;
  }
  const OptimalInput& input() {
    if (!input_) input_ = optimal_input_state(c_);
    return *input_;
  }

  KrausChannel c_;
  std::optional<OptimalFraction> fraction_;
  std::optional<OptimalInput> input_;
};

int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = {
      "F_lambda", "raw_lambda_max", "f_tel",          "N_choi", "N_channel",      "N_opt_input",
      "F1",       "fstar_phi_plus", "gap",            "schmidt_lambda", "unital_deviation"};
  return columns;
}

std::string run_sweep(const SweepSpec& spec, int workers) {
  if (spec.steps < 2) throw SpecError("--steps must be at least 2");
  if (!(spec.from <= spec.to)) throw SpecError("--from must not exceed --to");
  if (spec.columns.empty()) throw SpecError("--columns must name at least one column");
  const auto& known = sweep_columns();
  for (const std::string& col : spec.columns) {
    if (std::find(known.begin(), known.end(), col) == known.end()) {
      std::string list;
      for (const std::string& k : known) list += (list.empty() ? "" : ",") + k;
      throw SpecError("unknown column '" + col + "'; available: " + list);
    }
  }
  if (spec.fixed.contains(spec.param)) {
    throw SpecError("parameter '" + spec.param + "' is both swept and fixed");
  }

  std::vector<double> values(spec.steps);
  std::vector<KrausChannel> channels;
  for (int i = 0; i < spec.steps; ++i) {
    values[i] = i + 1 == spec.steps ? spec.to
                                    : spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
    KrausChannel::Params params = spec.fixed;
    params[spec.param] = values[i];
    channels.push_back(make_named_channel(spec.channel_name, params));
    require_cptp(channels.back());
  }

  std::vector<std::string> rows(spec.steps);
  parallel_for(spec.steps, workers, [&](int i) {
    RowEvaluator eval(channels[i]);
    std::string row = format_double(values[i]);
    for (const std::string& col : spec.columns) {
      const std::optional<double> v = eval.column(col);
      row += ",";
      if (v) row += format_double(*v);
    }
    rows[i] = row + "\n";
  });

  std::string out = "param";
  for (const std::string& col : spec.columns) out += "," + col;
  out += "\n";
  for (const std::string& row : rows) out += row;
  return out;
}

json report_to_json(const ChannelReport& r) {
  json out;
  out["channel"] = channel_to_json(r.channel);
  out["F_lambda"] = r.fraction.value;
  out["raw_lambda_max"] = r.fraction.raw_lambda_max;
  out["entanglement_breaking"] = r.fraction.entanglement_breaking;
  out["f_tel"] = r.teleportation_fidelity;
  out["psi0"] = vector_to_json(r.input.psi0);
  out["psi0_schmidt"] = {r.input.schmidt.coefficients[0], r.input.schmidt.coefficients[1]};
  out["psi0_degenerate"] = r.input.degenerate;
  out["unital"] = r.classification.unitality.unital;
  out["unital_deviation"] = r.classification.unitality.deviation;
  out["psi0_maximally_entangled"] = r.classification.psi0_maximally_entangled;
  out["unitality_verdict"] = to_string(r.classification.verdict);
  out["N_choi"] = r.choi_negativity;
  out["N_channel"] = r.channel_negativity.value;
  out["N_channel_schmidt_lambda"] = r.channel_negativity.schmidt_lambda;
  out["N_channel_input"] = vector_to_json(r.channel_negativity.input_state);
  out["N_opt_input"] = r.optimal_input_negativity;
  out["negativity_bound"] = 0.5 * (1 + r.choi_negativity);
  out["F1"] = r.preprocessed_fidelity;
  if (r.gap.defined) {
    out["fstar_phi_plus"] = r.gap.fstar_choi;
    out["gap"] = r.gap.gap;
  } else {
    out["fstar_phi_plus"] = nullptr;
    out["gap"] = nullptr;
  }
  out["residuals"] = r.residuals;
  return out;
}

std::string report_to_text(const ChannelReport& r) {
  std::ostringstream out;
  const auto line = [&out](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 30 ? 30 - key.size() : 1, ' ') << value << "\n";
  };
  line("channel", describe(r.channel));
  line("F(Lambda)", format_double(r.fraction.value));
  line("lambda_max(J)", format_double(r.fraction.raw_lambda_max));
  line("entanglement breaking", r.fraction.entanglement_breaking ? "yes" : "no");
  line("f_tel", format_double(r.teleportation_fidelity));
  line("psi0", format_vector(r.input.psi0));
  line("psi0 Schmidt", "(" + format_double(r.input.schmidt.coefficients[0]) + ", " +
                           format_double(r.input.schmidt.coefficients[1]) + ")" +
                           (r.input.degenerate ? " degenerate" : ""));
  line("unital", std::string(r.classification.unitality.unital ? "yes" : "no") +
                     " (deviation " + format_double(r.classification.unitality.deviation) + ")");
  line("psi0 maximally entangled", r.classification.psi0_maximally_entangled ? "yes" : "no");
  line("unitality verdict", to_string(r.classification.verdict));
  line("N_choi", format_double(r.choi_negativity));
  line("N_channel", format_double(r.channel_negativity.value) + " (Schmidt lambda " +
                        format_double(r.channel_negativity.schmidt_lambda) + ")");
  line("N_opt_input", format_double(r.optimal_input_negativity));
  line("F1", format_double(r.preprocessed_fidelity));
  if (r.gap.defined) {
    line("fstar(J)", format_double(r.gap.fstar_choi));
    line("gap F - fstar(J)", format_double(r.gap.gap));
  } else {
    line("fstar(J)", "-");
    line("gap F - fstar(J)", "-");
  }
  out << "residuals\n";
  for (const auto& [k, v] : r.residuals) line("  " + k, format_double(v));
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"entshare: one-shot entanglement sharing through qubit channels"};
  app.require_subcommand(1);

  std::string name;
  std::vector<std::string> param_items;
  std::string file;
  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> seed;
  int workers = 0;
  int count = 100;
  int steps = 11;
  double from = 0;
  double to = 1;
  std::string columns = "F_lambda,N_choi,N_channel";

  CLI::App* analyze = app.add_subcommand("analyze", "Report on one channel");
  auto* name_opt = analyze->add_option("--name", name, "Named channel constructor");
  analyze->add_option("--param", param_items, "Constructor parameter k=v (repeatable)");
  auto* file_opt = analyze->add_option("--file", file, "Channel JSON file");
  name_opt->excludes(file_opt);
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");
  analyze->add_option("--seed", seed, "Seed for the optimizers");
  analyze->add_option("--workers", workers, "Worker threads")->check(CLI::NonNegativeNumber);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate columns over a parameter range");
  sweep->add_option("--name", name, "Named channel constructor")->required();
  sweep->add_option("--param", param_items,
                    "Swept parameter name, or fixed k=v (repeatable); default p");
  sweep->add_option("--from", from, "First parameter value");
  sweep->add_option("--to", to, "Last parameter value");
  sweep->add_option("--steps", steps, "Number of rows");
  sweep->add_option("--columns", columns, "Comma-separated columns");
  sweep->add_option("--out", out_path, "CSV path; stdout if omitted");
  sweep->add_option("--workers", workers, "Worker threads")->check(CLI::NonNegativeNumber);

  CLI::App* audit = app.add_subcommand("audit", "Randomized identity audit");
  audit->add_option("--seed", seed, "Master seed");
  audit->add_option("--count", count, "Number of random channels");
  audit->add_option("--out", out_path, "Directory for reproduction files");
  audit->add_option("--workers", workers, "Worker threads")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (workers == 0) workers = default_workers();

  try {
    if (analyze->parsed()) {
      KrausChannel c = [&] {
        if (!file.empty()) return channel_from_json_text(read_file(file));
        if (name.empty()) throw SpecError("analyze needs --name or --file");
        return make_named_channel(name, parse_params(param_items));
      }();
      if (!file.empty() && !param_items.empty()) throw SpecError("--param is not used with --file");
      require_cptp(c);
      ReportOptions options;
      options.negativity.workers = workers;
      options.fstar.workers = workers;
      if (seed) {
        options.negativity.seed = derive_seed(*seed, 0);
        options.fstar.seed = derive_seed(*seed, 1);
      }
      const ChannelReport r = report(c, options);
      emit(format == "json" ? report_to_json(r).dump(2) + "\n" : report_to_text(r), out_path, out);
      return kExitOk;
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.channel_name = name;
      std::vector<std::string> bare;
      spec.fixed = parse_params(param_items, &bare);
      if (bare.size() > 1) throw SpecError("only one parameter can be swept");
      if (!bare.empty()) spec.param = bare[0];
      spec.from = from;
      spec.to = to;
      spec.steps = steps;
      std::stringstream list(columns);
      for (std::string col; std::getline(list, col, ',');) {
        if (!col.empty()) spec.columns.push_back(col);
      }
      emit(run_sweep(spec, workers), out_path, out);
      return kExitOk;
    }
    if (audit->parsed()) {
      if (count < 1) throw SpecError("--count must be at least 1");
      AuditOptions options;
      options.seed = seed.value_or(42);
      options.count = count;
      options.workers = workers;
      options.repro_dir = out_path.empty() ? "." : out_path;
      const AuditResult result = run_audit(options);
      out << "audit seed=" << options.seed << " count=" << options.count << "\n";
      out << format_audit(result);
      if (result.passed()) {
        out << "result: PASS\n";
        return kExitOk;
      }
      out << "result: FAIL (" << result.violations.size() << " violations)\n";
      for (const Violation& v : result.violations) {
        err << "violation: channel " << v.index << " " << v.check << " value "
            << format_double(v.value) << " threshold " << format_double(v.threshold) << "\n";
      }
      for (const std::string& path : result.repro_files) err << "reproduction: " << path << "\n";
      return kExitViolation;
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidChannel& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidChannel;
  }
  return kExitUsage;
}

}  // namespace entshare
