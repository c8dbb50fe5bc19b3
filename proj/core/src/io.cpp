#include "dunkl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string profile_csv(const SpectralProfile& p) {
  std::ostringstream os;
  os << "lambda,value_re,value_im\n";
  for (std::size_t i = 0; i < p.grid.size(); ++i)
    os << format_number(p.grid[i]) << ',' << format_number(p.values[i].real()) << ','
       << format_number(p.values[i].imag()) << '\n';
  return os.str();
}

std::string profile_json(const SpectralProfile& p) {
  std::ostringstream os;
  os << "{\"k\":{\"re\":" << format_number(p.k.re())
     << ",\"im\":" << format_number(p.k.im()) << "},\"grid\":[";
  for (std::size_t i = 0; i < p.grid.size(); ++i)
    os << (i ? "," : "") << format_number(p.grid[i]);
  os << "],\"values\":[";
  for (std::size_t i = 0; i < p.values.size(); ++i)
    os << (i ? "," : "") << "{\"re\":" << format_number(p.values[i].real())
       << ",\"im\":" << format_number(p.values[i].imag()) << "}";
  os << "],\"provenance\":\"" << p.provenance
     << "\",\"truncation_radius\":" << format_number(p.truncation_radius) << "}";
  return os.str();
}

std::string bang_csv(const BangSequence& seq) {
  std::ostringstream os;
  os << "n,norm,a_n,method,k_re,k_im,p,R_true\n";
  const std::string p_str = std::isinf(seq.p) ? "inf" : format_number(seq.p);
  const std::string r_str = std::isnan(seq.R_true) ? "inf" : format_number(seq.R_true);
  for (const auto& e : seq.entries)
    os << e.n << ',' << format_number(e.norm) << ',' << format_number(e.root) << ','
       << seq.method << ',' << format_number(seq.k.re()) << ','
       << format_number(seq.k.im()) << ',' << p_str << ',' << r_str << '\n';
  return os.str();
}

std::string certificate_json(const GrowthCertificate& cert) {
  std::ostringstream os;
  os << "{\"R\":" << format_number(cert.R) << ",\"n\":" << cert.n
     << ",\"tau_max\":" << format_number(cert.tau_max)
     << ",\"C_n\":" << format_number(cert.C_n)
     << ",\"stability\":" << format_number(cert.stability)
     << ",\"grid\":{\"sigma_max\":" << format_number(cert.grid.sigma_max)
     << ",\"n_sigma\":" << cert.grid.n_sigma << ",\"n_tau\":" << cert.grid.n_tau
     << "}}";
  return os.str();
}

std::string identity_report_json(const IdentityReport& rep) {
  std::ostringstream os;
  os << "{\"defects\":{";
  bool first = true;
  for (const auto& [name, d] : rep.defects) {
    os << (first ? "" : ",") << '"' << name << "\":" << format_number(d);
    first = false;
  }
  os << "},\"skipped\":[";
  first = true;
  for (const auto& name : rep.skipped) {
    os << (first ? "" : ",") << '"' << name << '"';
    first = false;
  }
  os << "]}";
  return os.str();
}

std::string support_json(const SupportEstimate& est) {
  std::ostringstream os;
  os << "{\"radius\":" << (est.infinite ? "\"inf\"" : format_number(est.radius))
     << ",\"epsilon\":" << format_number(est.epsilon)
     << ",\"lambda_max\":" << format_number(est.lambda_max) << "}";
  return os.str();
}

std::uint64_t fnv1a_hash(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace dunkl
