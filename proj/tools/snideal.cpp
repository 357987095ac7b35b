// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
//
// CLI dispatcher. Every command echoes its seed and writes deterministic
// JSON (timing only under --timing, in a separate envelope field).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snideal/json_io.hpp"
#include "snideal/verify.hpp"

namespace {

using namespace snideal;

Spectrum parse_seq(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    vals.push_back(std::stod(item));
  }
  if (vals.empty()) throw std::invalid_argument("--seq needs a comma-separated list");
  return Spectrum(std::move(vals));
}

void emit(const ojson& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (out_path.empty())
    std::cout << text;
  else
    write_text_atomic(out_path, text);
}

void emit_csv(const std::vector<std::pair<double, double>>& series,
              const std::string& path) {
  std::ostringstream os;
  os.precision(17);
  os << "n,value\n";
  for (const auto& [n, v] : series) os << n << "," << v << "\n";
  write_text_atomic(path, os.str());
}

ojson parse_param_value(const std::string& raw) {
  if (raw == "true") return true;
  if (raw == "false") return false;
  if (!raw.empty() && (raw.front() == '[' || raw.front() == '{')) return ojson::parse(raw);
  try {
    std::size_t pos = 0;
    double v = std::stod(raw, &pos);
    if (pos == raw.size()) return v;
  } catch (...) {
  }
  return raw;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"snideal: symmetric normed ideals, matrix cross norms, verification campaigns"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags (--out, --seed, --timing) work after the subcommand
  app.set_config("--config", "", "flat key=value config file");

  std::string spec_text = "schatten:2", phi_text = "schatten:2", psi_text = "schatten:2";
  std::string seq_text, tuple_path, out_path, csv_path, campaign;
  std::uint64_t seed = 0;
  int restarts = 16, max_iters = 500, samples = 0, n_max = 0, grid = 6;
  double tol = 1e-10;
  bool timing = false, kick = false;
  std::vector<std::string> raw_params;

  app.add_option("--out", out_path, "write JSON here (atomic), default stdout")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed, echoed in output")->capture_default_str();
  app.add_flag("--timing", timing, "include wall time in an envelope field");

  auto* c_norm = app.add_subcommand("norm", "evaluate a symmetric norming function");
  c_norm->add_option("--spec", spec_text, "norm spec, e.g. schatten:2")->required();
  c_norm->add_option("--seq", seq_text, "comma-separated sequence")->required();

  auto* c_dual = app.add_subcommand("dual", "evaluate the adjoint norm");
  c_dual->add_option("--spec", spec_text)->required();
  c_dual->add_option("--seq", seq_text)->required();

  auto* c_mcn = app.add_subcommand("mcn", "matrix cross norm of a tuple");
  c_mcn->add_option("--phi", phi_text)->required();
  c_mcn->add_option("--psi", psi_text)->required();
  c_mcn->add_option("--tuple", tuple_path, "MatrixTuple JSON file")->required();
  c_mcn->add_option("--restarts", restarts)->capture_default_str();
  c_mcn->add_option("--max-iters", max_iters)->capture_default_str();
  c_mcn->add_option("--tol", tol)->capture_default_str();
  c_mcn->add_flag("--kick", kick, "random-unitary escape kicks");

  auto* c_mult = app.add_subcommand("multiplicator", "multiplicator norm of a sequence");
  c_mult->add_option("--phi", phi_text)->required();
  c_mult->add_option("--psi", psi_text)->required();
  c_mult->add_option("--seq", seq_text)->required();
  c_mult->add_option("--samples", samples);

  auto* c_cbrow = app.add_subcommand("cb-row", "cb norm from the row space");
  c_cbrow->add_option("--phi", phi_text)->required();
  c_cbrow->add_option("--psi", psi_text)->required();
  c_cbrow->add_option("--seq", seq_text)->required();

  auto* c_boyd = app.add_subcommand("boyd", "Boyd exponent estimate");
  c_boyd->add_option("--spec", spec_text)->required();
  c_boyd->add_option("--n-max", n_max, "largest rank, >= 4")->required();
  c_boyd->add_option("--emit-csv", csv_path, "write the series as CSV");

  auto* c_tp = app.add_subcommand("tensor-power", "normalized tensor power series");
  c_tp->add_option("--spec", spec_text)->required();
  c_tp->add_option("--seq", seq_text)->required();
  c_tp->add_option("--n-max", n_max)->required();
  c_tp->add_option("--emit-csv", csv_path);

  auto* c_verify = app.add_subcommand("verify", "run a named verification campaign");
  c_verify->add_option("--campaign", campaign, "campaign name")->required();
  c_verify->add_option("--phi", phi_text);
  c_verify->add_option("--psi", psi_text);
  c_verify->add_option("--param", raw_params, "extra key=value campaign params");
  c_verify->add_option("--emit-csv", csv_path, "write a campaign series (tensor_power, hsharp) as CSV");

  auto* c_oracle = app.add_subcommand("oracle", "brute-force cross-norm baseline");
  c_oracle->add_option("--phi", phi_text)->required();
  c_oracle->add_option("--psi", psi_text)->required();
  c_oracle->add_option("--tuple", tuple_path)->required();
  c_oracle->add_option("--grid", grid)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_norm->parsed()) {
      SnSpec spec = SnSpec::parse(spec_text);
      ojson j = {{"command", "norm"}, {"seed", seed}, {"spec", spec.label()},
                 {"value", eval(spec, parse_seq(seq_text))}};
      emit(j, out_path);
    } else if (c_dual->parsed()) {
      SnSpec spec = SnSpec::parse(spec_text);
      ojson j = {{"command", "dual"}, {"seed", seed}, {"spec", spec.label()},
                 {"value", dual_eval(spec, parse_seq(seq_text))},
                 {"exact", dual_is_exact(spec)}};
      emit(j, out_path);
    } else if (c_mcn->parsed()) {
      SnSpec phi = SnSpec::parse(phi_text), psi = SnSpec::parse(psi_text);
      MatrixTuple t = tuple_from_json(load_json_file(tuple_path), tuple_path);
      McnConfig cfg;
      cfg.restarts = restarts;
      cfg.max_iters = max_iters;
      cfg.tol = tol;
      cfg.seed = seed;
      cfg.unitary_kick = kick;
      NormEstimate est = mcn_norm(t, phi, psi, cfg);
      ojson j = {{"command", "mcn"}, {"seed", seed}, {"phi", phi.label()}, {"psi", psi.label()}};
      ojson ej = estimate_to_json(est);
      j.update(ej);
      emit(j, out_path);
    } else if (c_mult->parsed()) {
      SnSpec phi = SnSpec::parse(phi_text), psi = SnSpec::parse(psi_text);
      MultiplicatorConfig cfg;
      if (samples > 0) cfg.samples = samples;
      cfg.seed = seed;
      SeqEstimate est = multiplicator_norm(parse_seq(seq_text), phi, psi, cfg);
      ojson j = {{"command", "multiplicator"}, {"seed", seed},
                 {"phi", phi.label()},         {"psi", psi.label()},
                 {"value", est.value},         {"exactness", to_string(est.exactness)},
                 {"maximizer", spectrum_to_json(est.maximizer)}, {"method", est.method}};
      emit(j, out_path);
    } else if (c_cbrow->parsed()) {
      SnSpec phi = SnSpec::parse(phi_text), psi = SnSpec::parse(psi_text);
      MultiplicatorConfig cfg;
      cfg.seed = seed;
      ojson j = {{"command", "cb-row"}, {"seed", seed}, {"phi", phi.label()},
                 {"psi", psi.label()}, {"value", cb_from_row(parse_seq(seq_text), phi, psi, cfg)}};
      emit(j, out_path);
    } else if (c_boyd->parsed()) {
      SnSpec spec = SnSpec::parse(spec_text);
      BoydEstimate b = boyd_estimate(spec, static_cast<std::uint64_t>(n_max));
      ojson series = ojson::array();
      std::vector<std::pair<double, double>> csv;
      for (const auto& [n, v] : b.series) {
        series.push_back({n, v});
        csv.emplace_back(static_cast<double>(n), v);
      }
      ojson refined = ojson::array();
      for (const auto& [n, v] : b.refined_series) refined.push_back({n, v});
      ojson j = {{"command", "boyd"},    {"seed", seed},
                 {"spec", spec.label()}, {"p_estimate", b.unbounded ? ojson("inf") : ojson(b.p_estimate)},
                 {"unbounded", b.unbounded}, {"trend_stable", b.trend_stable},
                 {"series", series},     {"refined_series", refined}};
      emit(j, out_path);
      if (!csv_path.empty()) emit_csv(csv, csv_path);
    } else if (c_tp->parsed()) {
      SnSpec spec = SnSpec::parse(spec_text);
      auto series = tensor_power_trace(spec, parse_seq(seq_text), n_max);
      ojson sj = ojson::array();
      std::vector<std::pair<double, double>> csv;
      for (const auto& [n, v] : series) {
        sj.push_back({n, v});
        csv.emplace_back(n, v);
      }
      ojson j = {{"command", "tensor-power"}, {"seed", seed}, {"spec", spec.label()}, {"series", sj}};
      emit(j, out_path);
      if (!csv_path.empty()) emit_csv(csv, csv_path);
    } else if (c_verify->parsed()) {
      CampaignSpec cs;
      cs.name = campaign;
      cs.seed = seed;
      if (c_verify->count("--phi")) cs.params["phi"] = phi_text;
      if (c_verify->count("--psi")) cs.params["psi"] = psi_text;
      for (const std::string& raw : raw_params) {
        auto eq = raw.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--param expects key=value, got: " + raw);
        cs.params[raw.substr(0, eq)] = parse_param_value(raw.substr(eq + 1));
      }
      CampaignReport report = run_campaign(cs);
      emit(report.to_json(timing), out_path);
      if (!csv_path.empty()) {
        std::vector<std::pair<double, double>> csv;
        for (const auto& c : report.cases) {
          const char* key = c.values.contains("series")      ? "series"
                            : c.values.contains("truncated") ? "truncated"
                                                             : nullptr;
          if (!key) continue;
          for (const auto& row : c.values[key])
            csv.emplace_back(row[0].get<double>(), row[1].get<double>());
          break;
        }
        if (csv.empty())
          throw std::invalid_argument("campaign " + campaign + " has no series to emit");
        emit_csv(csv, csv_path);
      }
      return report.verdict == Verdict::fail ? 1 : 0;
    } else if (c_oracle->parsed()) {
      SnSpec phi = SnSpec::parse(phi_text), psi = SnSpec::parse(psi_text);
      MatrixTuple t = tuple_from_json(load_json_file(tuple_path), tuple_path);
      OracleConfig cfg;
      cfg.spectrum_grid = grid;
      cfg.seed = seed;
      ojson j = {{"command", "oracle"}, {"seed", seed}, {"phi", phi.label()},
                 {"psi", psi.label()}, {"value", oracle_mcn_bruteforce(t, phi, psi, cfg)}};
      emit(j, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
