#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>

#include "dunkl/io.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/version.hpp"
#include "experiments.hpp"

namespace {

using dunkl::cli::ExperimentConfig;
using dunkl::cli::ExperimentResult;

dunkl::cplx parse_pair(const std::string& s, const char* what) {
  double re = 0.0, im = 0.0;
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      re = std::stod(s);
    } else {
      re = std::stod(s.substr(0, comma));
      im = std::stod(s.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + ": expected re[,im]");
  }
  return {re, im};
}

double parse_p(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  return std::stod(s);
}

void add_common(CLI::App* sub, ExperimentConfig& cfg, std::vector<std::string>& ks,
                std::vector<std::string>& ps) {
  sub->add_option("--k", ks, "multiplicity re[,im] (repeatable)");
  sub->add_option("--p", ps, "norm exponent: 1, 2 or inf (repeatable)");
  sub->add_option("--R", cfg.R_list, "spectral support radius (repeatable)");
  sub->add_option("--n-max", cfg.n_max, "largest operator power");
  sub->add_option("--rho", cfg.rho, "bump flat fraction");
  sub->add_option("--eps", cfg.eps, "relative support threshold");
  sub->add_option("--tau-max", cfg.tau_max, "strip half-height");
  sub->add_option("--sigma-max", cfg.sigma_max, "strip half-width");
  sub->add_option("--claim", cfg.claim, "claimed type for the axis probe");
  sub->add_option("--tol", cfg.tol, "pass/fail tolerance");
  sub->add_option("--out", cfg.out_dir, "output directory");
  sub->add_option("--seed", cfg.seed, "random seed");
}

void apply_common(ExperimentConfig& cfg, const std::vector<std::string>& ks,
                  const std::vector<std::string>& ps) {
  if (!ks.empty()) {
    cfg.k_list.clear();
    for (const auto& s : ks) cfg.k_list.push_back(parse_pair(s, "--k"));
  }
  if (!ps.empty()) {
    cfg.p_list.clear();
    for (const auto& s : ps) cfg.p_list.push_back(parse_p(s));
  }
}

int run_tags(ExperimentConfig cfg, const std::vector<std::string>& tags) {
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "config error: cannot create %s\n", cfg.out_dir.c_str());
    return 2;
  }
  std::vector<ExperimentResult> results;
  try {
    for (const auto& tag : tags) {
      ExperimentResult r = dunkl::cli::run_experiment(tag, cfg);
      std::fprintf(stderr, "%-12s %s  worst defect %.3e  (%.1fs)\n", tag.c_str(),
                   r.pass ? "pass" : "FAIL", r.worst_defect, r.runtime_seconds);
      results.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "experiment error: %s\n", e.what());
    return 1;
  }
  return dunkl::cli::write_summary(cfg, results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical Dunkl transform toolkit"};
  app.set_version_flag("--version", DUNKL_VERSION_STRING);
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::vector<std::string> ks, ps;

  // kernel-eval: direct kernel evaluation with the certified tail bound
  auto* ke = app.add_subcommand("kernel-eval", "evaluate the kernel at (k, lambda, z)");
  std::string ke_k = "0", ke_lambda = "1", ke_z = "0";
  double ke_tol = 1e-12;
  ke->add_option("--k", ke_k, "multiplicity re[,im]");
  ke->add_option("--lambda", ke_lambda, "spectral argument re[,im]");
  ke->add_option("--z", ke_z, "spatial argument re[,im]");
  ke->add_option("--tol", ke_tol, "truncation tolerance");

  auto* ident = app.add_subcommand("identities", "structural identity defects");
  add_common(ident, cfg, ks, ps);
  auto* bang = app.add_subcommand("bang", "iterated-operator norm sequences");
  add_common(bang, cfg, ks, ps);
  auto* support = app.add_subcommand("support", "spectral support radius estimate");
  add_common(support, cfg, ks, ps);
  support->add_option("--lambda-max", cfg.lambda_max, "scan limit (times R)");
  auto* certify = app.add_subcommand("certify-pw", "strip growth certificates");
  add_common(certify, cfg, ks, ps);
  auto* rt = app.add_subcommand("roundtrip", "inverse-transform round trip");
  add_common(rt, cfg, ks, ps);

  auto* runc = app.add_subcommand("run", "run experiments from a JSON config");
  std::string config_path;
  runc->add_option("config", config_path, "config JSON path")->required();
  std::string run_out;
  unsigned run_seed = 0;
  bool seed_given = false;
  runc->add_option("--out", run_out, "output directory override");
  runc->add_option("--seed", run_seed, "seed override")->each([&](const std::string&) {
    seed_given = true;
  });

  CLI11_PARSE(app, argc, argv);

  try {
    if (ke->parsed()) {
      const auto kv = parse_pair(ke_k, "--k");
      const dunkl::Multiplicity k(kv.real(), kv.imag());
      const auto value = dunkl::kernel_eval(k, parse_pair(ke_lambda, "--lambda"),
                                            parse_pair(ke_z, "--z"), ke_tol);
      std::printf("psi = (%.17g, %.17g)\nterms = %d\ntail_bound = %.6g\n",
                  value.value.real(), value.value.imag(), value.terms,
                  value.tail_bound);
      return 0;
    }
    if (runc->parsed()) {
      ExperimentConfig file_cfg;
      try {
        file_cfg = dunkl::cli::config_from_json_file(config_path);
      } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
      }
      if (!run_out.empty()) file_cfg.out_dir = run_out;
      if (seed_given) file_cfg.seed = run_seed;
      if (file_cfg.experiments.empty()) {
        std::fprintf(stderr, "config error: no experiments listed\n");
        return 2;
      }
      return run_tags(file_cfg, file_cfg.experiments);
    }
    apply_common(cfg, ks, ps);
    if (ident->parsed()) return run_tags(cfg, {"identities"});
    if (bang->parsed()) return run_tags(cfg, {"bang"});
    if (support->parsed()) return run_tags(cfg, {"support"});
    if (certify->parsed()) return run_tags(cfg, {"certify-pw"});
    if (rt->parsed()) return run_tags(cfg, {"roundtrip"});
  } catch (const dunkl::TruncationError& e) {
    std::fprintf(stderr, "error: %s (achieved %.3g)\n", e.what(), e.achieved_bound());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
