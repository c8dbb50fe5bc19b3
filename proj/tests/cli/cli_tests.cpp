// End-to-end checks of the command-line runner: spawns the built binary,
// inspects exit codes and the emitted report files, and verifies that data
// reports are byte-identical across thread counts (the runtime_seconds field
// of summary.json is the only volatile value and is masked here).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("  %s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + g_cli + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string mask_runtime(std::string s) {
  static const std::regex re("\"runtime_seconds\": [-+0-9.eE]+");
  return std::regex_replace(s, re, "\"runtime_seconds\": X");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "dunkl_cli_tests";
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);

  // kernel-eval prints the value, term count and tail bound
  {
    const std::string cmd =
        g_cli + " kernel-eval --k 0 --lambda 1 --z 3.14159265358979323846 > " +
        (tmp / "ke.txt").string();
    check(std::system(cmd.c_str()) == 0, "kernel-eval exits 0");
    const std::string out = slurp(tmp / "ke.txt");
    check(out.find("psi = (-0.9999") != std::string::npos || out.find("psi = (-1") != std::string::npos,
          "kernel-eval value ~ -1");
    check(out.find("tail_bound") != std::string::npos, "kernel-eval prints bound");
  }

  // config validation: malformed input exits 2 and leaves no partial files
  {
    const auto bad = tmp / "bad.json";
    std::ofstream(bad) << "{ not json";
    const auto out_dir = (tmp / "bad_out").string();
    check(run("run " + bad.string() + " --out " + out_dir) == 2,
          "malformed config exits 2");
    check(!std::filesystem::exists(tmp / "bad_out" / "summary.json"),
          "no partial summary on config error");

    const auto invalid = tmp / "invalid.json";
    std::ofstream(invalid) << R"({"experiments":["bang"],"k":[-1.0]})";
    check(run("run " + invalid.string()) == 2, "negative Re k exits 2");

    const auto unknown = tmp / "unknown.json";
    std::ofstream(unknown) << R"({"experiments":["frobnicate"]})";
    check(run("run " + unknown.string()) == 2, "unknown experiment exits 2");
  }

  // a small passing experiment writes its reports and exits 0
  {
    const auto out1 = tmp / "runA";
    const int rc = run("bang --k 0.5 --p 2 --R 1 --n-max 8 --out " + out1.string(),
                       "DUNKL_THREADS=1");
    check(rc == 0, "bang run exits 0");
    const auto csv = out1 / "bang_k0.5_p2_R1.csv";
    check(std::filesystem::exists(csv), "bang csv written");
    const std::string head = slurp(csv).substr(0, 33);
    check(head == "n,norm,a_n,method,k_re,k_im,p,R_t", "bang csv header");
    const std::string summary = slurp(out1 / "summary.json");
    check(summary.find("\"config_hash\"") != std::string::npos,
          "summary embeds config hash");
    check(summary.find("\"version\"") != std::string::npos,
          "summary embeds library version");
  }

  // determinism across thread counts: data reports byte-identical, summary
  // identical after masking the runtime field
  {
    const auto out1 = tmp / "det1";
    const auto out2 = tmp / "det2";
    check(run("bang --k 0.5 --p 2 --R 1 --n-max 8 --out " + out1.string(),
              "DUNKL_THREADS=1") == 0,
          "single-thread run exits 0");
    check(run("bang --k 0.5 --p 2 --R 1 --n-max 8 --out " + out2.string(),
              "DUNKL_THREADS=4") == 0,
          "multi-thread run exits 0");
    check(slurp(out1 / "bang_k0.5_p2_R1.csv") == slurp(out2 / "bang_k0.5_p2_R1.csv"),
          "bang csv byte-identical across thread counts");
    check(mask_runtime(slurp(out1 / "summary.json")) ==
              mask_runtime(slurp(out2 / "summary.json")),
          "summary identical modulo runtime");
  }

  // config-driven run with two experiments
  {
    const auto cfgp = tmp / "cfg.json";
    std::ofstream(cfgp) << R"({"experiments":["kernel-check"],"seed":1,"out":")"
                        << (tmp / "runC").string() << R"("})";
    check(run("run " + cfgp.string()) == 0, "config run exits 0");
    check(std::filesystem::exists(tmp / "runC" / "kernel_check.json"),
          "kernel-check report written");
    check(std::filesystem::exists(tmp / "runC" / "summary.json"),
          "config run summary written");
  }

  if (g_failures) std::printf("%d cli check(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
