#ifndef DUNKL_TOOLS_EXPERIMENTS_HPP
#define DUNKL_TOOLS_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "dunkl/multiplicity.hpp"

namespace dunkl::cli {

struct ExperimentConfig {
  std::vector<std::string> experiments;  // kernel-check, identities, bang,
                                         // support, certify-pw, roundtrip
  std::vector<cplx> k_list{cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(1.3, 0.0)};
  std::vector<double> p_list{2.0};  // inf encoded as infinity
  std::vector<double> R_list{1.0};
  int n_max = 64;
  double rho = 0.9;
  double eps = 1e-8;
  double lambda_max = 2.0;
  double tau_max = 3.0;
  double sigma_max = 20.0;
  double claim = 0.0;  // optional false-claim probe for certify-pw
  double tol = 1e-6;
  unsigned seed = 0;
  std::string out_dir = "out";

  void validate() const;  // throws std::invalid_argument
  std::string canonical_json() const;
};

struct ExperimentResult {
  std::string experiment;
  bool pass = true;
  double worst_defect = 0.0;
  double runtime_seconds = 0.0;
  std::vector<std::string> files;
};

ExperimentResult run_kernel_check(const ExperimentConfig& cfg);
ExperimentResult run_identities(const ExperimentConfig& cfg);
ExperimentResult run_bang(const ExperimentConfig& cfg);
ExperimentResult run_support(const ExperimentConfig& cfg);
ExperimentResult run_certify_pw(const ExperimentConfig& cfg);
ExperimentResult run_roundtrip(const ExperimentConfig& cfg);

/// Dispatch by tag; unknown tags throw std::invalid_argument.
ExperimentResult run_experiment(const std::string& tag, const ExperimentConfig& cfg);

/// Writes summary.json (config hash, library version, declared defaults,
/// one entry per experiment). Returns the exit code: 0 when every
/// experiment passed, 1 otherwise.
int write_summary(const ExperimentConfig& cfg,
                  const std::vector<ExperimentResult>& results);

ExperimentConfig config_from_json_file(const std::string& path);

}  // namespace dunkl::cli

#endif
