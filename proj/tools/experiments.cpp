#include "experiments.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dunkl/analysis.hpp"
#include "dunkl/io.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/version.hpp"

namespace dunkl::cli {

namespace {

using nlohmann::json;

std::string k_tag(cplx k) {
  std::ostringstream os;
  os << k.real();
  if (k.imag() != 0.0) os << '_' << k.imag();
  return os.str();
}

std::string p_tag(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::filesystem::path out_path(const ExperimentConfig& cfg, const std::string& name) {
  return std::filesystem::path(cfg.out_dir) / name;
}

json meta(const ExperimentConfig& cfg) {
  json m;
  m["version"] = DUNKL_VERSION_STRING;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a_hash(cfg.canonical_json())));
  m["config_hash"] = buf;
  return m;
}

// Experiment defaults worth reporting: any discrepancy between a theory
// value and a computed one must be attributable to a concrete setting.
json defaults_json(const ExperimentConfig& cfg) {
  json d;
  d["kernel_tol"] = 1e-12;
  d["quad_tol"] = 1e-9;
  d["grid"] = {{"delta", 0.1},
               {"gl_order", 32},
               {"jacobi_order", 24},
               {"max_panel_width", 6.0}};
  d["envelope_cutoff"] = 1e-16;
  d["support_eps"] = cfg.eps;
  d["rho"] = cfg.rho;
  d["seed"] = cfg.seed;
  d["tolerance"] = cfg.tol;
  return d;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(tol > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("config: tolerances must be > 0");
  for (const auto& k : k_list)
    if (!(k.real() >= 0.0) || !std::isfinite(k.real()) || !std::isfinite(k.imag()))
      throw std::invalid_argument("config: every k needs finite Re k >= 0");
  for (double p : p_list)
    if (!(p >= 1.0))
      throw std::invalid_argument("config: p must lie in [1, inf]");
  for (double R : R_list)
    if (!(R > 0.0)) throw std::invalid_argument("config: R must be > 0");
  if (n_max < 1) throw std::invalid_argument("config: n_max must be >= 1");
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("config: rho must lie in (0, 1)");
  for (const auto& e : experiments)
    if (e != "kernel-check" && e != "identities" && e != "bang" && e != "support" &&
        e != "certify-pw" && e != "roundtrip")
      throw std::invalid_argument("config: unknown experiment tag: " + e);
}

std::string ExperimentConfig::canonical_json() const {
  json j;
  j["experiments"] = experiments;
  auto& ks = j["k"] = json::array();
  for (const auto& k : k_list) ks.push_back({k.real(), k.imag()});
  auto& ps = j["p"] = json::array();
  for (double p : p_list) ps.push_back(std::isinf(p) ? json("inf") : json(p));
  j["R"] = R_list;
  j["n_max"] = n_max;
  j["rho"] = rho;
  j["eps"] = eps;
  j["lambda_max"] = lambda_max;
  j["tau_max"] = tau_max;
  j["sigma_max"] = sigma_max;
  j["claim"] = claim;
  j["tol"] = tol;
  j["seed"] = seed;
  // the output location is not part of the experiment's semantics and stays
  // out of the hash
  return j.dump();
}

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  json j = json::parse(is);  // throws on malformed input
  ExperimentConfig cfg;
  if (j.contains("experiments")) cfg.experiments = j["experiments"].get<std::vector<std::string>>();
  if (j.contains("k")) {
    cfg.k_list.clear();
    for (const auto& e : j["k"]) {
      if (e.is_number())
        cfg.k_list.emplace_back(e.get<double>(), 0.0);
      else
        cfg.k_list.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  if (j.contains("p")) {
    cfg.p_list.clear();
    for (const auto& e : j["p"]) {
      if (e.is_string() && e.get<std::string>() == "inf")
        cfg.p_list.push_back(std::numeric_limits<double>::infinity());
      else
        cfg.p_list.push_back(e.get<double>());
    }
  }
  if (j.contains("R")) cfg.R_list = j["R"].get<std::vector<double>>();
  if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
  if (j.contains("rho")) cfg.rho = j["rho"].get<double>();
  if (j.contains("eps")) cfg.eps = j["eps"].get<double>();
  if (j.contains("lambda_max")) cfg.lambda_max = j["lambda_max"].get<double>();
  if (j.contains("tau_max")) cfg.tau_max = j["tau_max"].get<double>();
  if (j.contains("sigma_max")) cfg.sigma_max = j["sigma_max"].get<double>();
  if (j.contains("claim")) cfg.claim = j["claim"].get<double>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  cfg.validate();
  return cfg;
}

ExperimentResult run_kernel_check(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.experiment = "kernel-check";

  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> Uk(0.0, 3.0), Ux(-10.0, 10.0);

  // sup bound |psi| <= 1 on real arguments: a real-multiplicity fact
  double worst_bound = 0.0, worst_resid = 0.0, worst_sym = 0.0;
  const int n = 400;
  for (int i = 0; i < n; ++i) {
    const Multiplicity kr(Uk(rng));
    const Multiplicity kc(Uk(rng), Uk(rng));
    const double l = Ux(rng), x = Ux(rng);
    const auto v = kernel_eval(kr, l, x);
    worst_bound = std::max(worst_bound, std::abs(v.value) - 1.0);
    worst_resid = std::max(worst_resid, kernel_residual(kc, l, x));
    // symmetry / scaling in exact arithmetic of u = lambda z
    const auto a = kernel_eval(kc, l, x);
    const auto b = kernel_eval(kc, x, l);
    worst_sym = std::max(worst_sym, std::abs(a.value - b.value));
  }

  json j = meta(cfg);
  j["experiment"] = "kernel-check";
  j["samples"] = n;
  j["worst_bound_excess"] = worst_bound;
  j["worst_residual"] = worst_resid;
  j["worst_symmetry_defect"] = worst_sym;
  j["defaults"] = defaults_json(cfg);
  const auto file = out_path(cfg, "kernel_check.json");
  write_text_file(file.string(), j.dump(2) + "\n");

  res.files.push_back(file.filename().string());
  res.worst_defect = std::max({worst_bound, worst_resid, worst_sym});
  res.pass = worst_bound <= 1e-10 && worst_resid <= 1e-8 && worst_sym <= 1e-10;
  res.runtime_seconds = elapsed(t0);
  return res;
}

ExperimentResult run_identities(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.experiment = "identities";
  const IdentityFamily family = IdentityFamily::standard(cfg.seed);
  for (const auto& kv : cfg.k_list) {
    const Multiplicity k(kv.real(), kv.imag());
    const IdentityReport rep = identity_suite(k, family);
    json j = meta(cfg);
    j["experiment"] = "identities";
    j["k"] = {{"re", k.re()}, {"im", k.im()}};
    j["report"] = json::parse(identity_report_json(rep));
    j["defaults"] = defaults_json(cfg);
    const auto file = out_path(cfg, "identities_k" + k_tag(kv) + ".json");
    write_text_file(file.string(), j.dump(2) + "\n");
    res.files.push_back(file.filename().string());
    res.worst_defect = std::max(res.worst_defect, rep.worst());
    res.pass = res.pass && rep.worst() <= cfg.tol;
  }
  res.runtime_seconds = elapsed(t0);
  return res;
}

ExperimentResult run_bang(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.experiment = "bang";
  for (const auto& kv : cfg.k_list) {
    const Multiplicity k(kv.real(), kv.imag());
    for (double R : cfg.R_list) {
      const BandLimited bl = band_limited_synthesize(k, R, cfg.rho, 400.0);
      const SpectralSource src = make_source(bl);
      const BangWorkspace ws = make_bang_workspace(src, cfg.n_max);
      for (double p : cfg.p_list) {
        const BangSequence seq = bang_from_workspace(k, src, ws, p);
        const auto base =
            "bang_k" + k_tag(kv) + "_p" + p_tag(p) + "_R" + p_tag(R);
        const auto file = out_path(cfg, base + ".csv");
        write_text_file(file.string(), bang_csv(seq));
        res.files.push_back(file.filename().string());
        // Richardson column in 1/n, emitted but not certified
        json side = meta(cfg);
        auto& rich = side["richardson"] = json::array();
        for (const auto& e : seq.entries) {
          if (e.n % 2 == 0 && e.n / 2 >= 1) {
            const auto& half = seq.entries[e.n / 2 - 1];
            rich.push_back({{"n", e.n},
                            {"a_n", e.root},
                            {"extrapolated", 2.0 * e.root - half.root}});
          }
        }
        side["norm_domain"] = seq.norm_domain;
        const auto sfile = out_path(cfg, base + ".json");
        write_text_file(sfile.string(), side.dump(2) + "\n");
        res.files.push_back(sfile.filename().string());
        const double a_last = seq.entries.back().root;
        res.worst_defect = std::max(res.worst_defect, std::abs(a_last - R) / R);
        // the finite-n recovery window is declared at n = 64; shorter
        // sequences are reported without a pass/fail verdict on the limit
        if (cfg.n_max >= 64) {
          const bool ok = a_last >= 0.85 * R && a_last <= 1.05 * R;
          res.pass = res.pass && ok;
        }
      }
    }
  }
  res.runtime_seconds = elapsed(t0);
  return res;
}

ExperimentResult run_support(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.experiment = "support";
  for (const auto& kv : cfg.k_list) {
    const Multiplicity k(kv.real(), kv.imag());
    for (double R : cfg.R_list) {
      const double eval_radius = 400.0 + 480.0 * k.re();
      const BandLimited bl = band_limited_synthesize(k, R, 0.5, eval_radius);
      SpectralProfile scan;
      const SupportEstimate est = support_radius(k, FuncRep(bl), cfg.eps,
                                                 cfg.lambda_max * R, {}, &scan);
      const auto base = "support_k" + k_tag(kv) + "_R" + p_tag(R);
      const auto csv_file = out_path(cfg, base + "_profile.csv");
      write_text_file(csv_file.string(), profile_csv(scan));
      const auto pjson_file = out_path(cfg, base + "_profile.json");
      write_text_file(pjson_file.string(), profile_json(scan) + "\n");
      res.files.push_back(csv_file.filename().string());
      res.files.push_back(pjson_file.filename().string());
      json j = meta(cfg);
      j["experiment"] = "support";
      j["k"] = {{"re", k.re()}, {"im", k.im()}};
      j["R_true"] = R;
      j["estimate"] = json::parse(support_json(est));
      j["defaults"] = defaults_json(cfg);
      const auto file = out_path(cfg, base + ".json");
      write_text_file(file.string(), j.dump(2) + "\n");
      res.files.push_back(file.filename().string());
      const bool ok = !est.infinite && est.radius >= 0.95 * R && est.radius <= 1.02 * R;
      res.pass = res.pass && ok;
      res.worst_defect = std::max(res.worst_defect, std::abs(est.radius - R) / R);
    }
  }
  res.runtime_seconds = elapsed(t0);
  return res;
}

ExperimentResult run_certify_pw(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.experiment = "certify-pw";
  for (const auto& kv : cfg.k_list) {
    const Multiplicity k(kv.real(), kv.imag());
    for (double R : cfg.R_list) {
      const ClosedForm bump = ClosedForm::bump(R, 0.5);
      const ChebPoly f =
          ChebPoly::fit([&bump](double x) { return bump.eval(x); }, R, 160);
      GridSpec grid;
      grid.sigma_max = cfg.sigma_max;
      json j = meta(cfg);
      j["experiment"] = "certify-pw";
      j["k"] = {{"re", k.re()}, {"im", k.im()}};
      json certs = json::array();
      double worst_stab = 0.0;
      for (int n : {0, 2, 4}) {
        const GrowthCertificate cert = growth_certify(k, f, n, cfg.tau_max, grid);
        certs.push_back(json::parse(certificate_json(cert)));
        worst_stab = std::max(worst_stab, cert.stability);
      }
      j["certificates"] = certs;
      if (cfg.claim > 0.0) {
        const auto ratios = axis_growth_ratios(k, f, cfg.claim, {1.0, 2.0, 3.0});
        j["claim"] = cfg.claim;
        j["claim_axis_ratios"] = ratios;
      }
      j["defaults"] = defaults_json(cfg);
      const auto file =
          out_path(cfg, "certify_k" + k_tag(kv) + "_R" + p_tag(R) + ".json");
      write_text_file(file.string(), j.dump(2) + "\n");
      res.files.push_back(file.filename().string());
      res.worst_defect = std::max(res.worst_defect, worst_stab);
      res.pass = res.pass && worst_stab <= 0.01;
    }
  }
  res.runtime_seconds = elapsed(t0);
  return res;
}

ExperimentResult run_roundtrip(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  res.experiment = "roundtrip";
  for (const auto& kv : cfg.k_list) {
    const Multiplicity k(kv.real(), kv.imag());
    const IdentityFamily fam = IdentityFamily::standard(cfg.seed);
    const IdentityReport rep = identity_suite(k, fam);
    const double defect = rep.defects.at("inversion");
    json j = meta(cfg);
    j["experiment"] = "roundtrip";
    j["k"] = {{"re", k.re()}, {"im", k.im()}};
    j["inversion_defect"] = defect;
    j["defaults"] = defaults_json(cfg);
    const auto file = out_path(cfg, "roundtrip_k" + k_tag(kv) + ".json");
    write_text_file(file.string(), j.dump(2) + "\n");
    res.files.push_back(file.filename().string());
    res.worst_defect = std::max(res.worst_defect, defect);
    res.pass = res.pass && defect <= cfg.tol;
  }
  res.runtime_seconds = elapsed(t0);
  return res;
}

ExperimentResult run_experiment(const std::string& tag, const ExperimentConfig& cfg) {
  if (tag == "kernel-check") return run_kernel_check(cfg);
  if (tag == "identities") return run_identities(cfg);
  if (tag == "bang") return run_bang(cfg);
  if (tag == "support") return run_support(cfg);
  if (tag == "certify-pw") return run_certify_pw(cfg);
  if (tag == "roundtrip") return run_roundtrip(cfg);
  throw std::invalid_argument("unknown experiment tag: " + tag);
}

int write_summary(const ExperimentConfig& cfg,
                  const std::vector<ExperimentResult>& results) {
  json j = meta(cfg);
  j["seed"] = cfg.seed;
  j["defaults"] = defaults_json(cfg);
  bool all = true;
  auto& arr = j["experiments"] = json::array();
  for (const auto& r : results) {
    json e;
    e["experiment"] = r.experiment;
    e["pass"] = r.pass;
    e["worst_defect"] = r.worst_defect;
    e["runtime_seconds"] = r.runtime_seconds;  // volatile field: excluded from
                                               // the byte-determinism contract
    e["files"] = r.files;
    arr.push_back(e);
    all = all && r.pass;
  }
  j["pass"] = all;
  write_text_file(out_path(cfg, "summary.json").string(), j.dump(2) + "\n");
  return all ? 0 : 1;
}

}  // namespace dunkl::cli
