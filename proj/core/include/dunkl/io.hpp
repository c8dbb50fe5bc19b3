#ifndef DUNKL_IO_HPP
#define DUNKL_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "dunkl/analysis.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

/// CSV with header `lambda,value_re,value_im` (real grids only).
std::string profile_csv(const SpectralProfile& p);
/// JSON with fields {k: {re, im}, grid, values, provenance, truncation_radius}.
std::string profile_json(const SpectralProfile& p);

/// CSV with header `n,norm,a_n,method,k_re,k_im,p,R_true`; p and R_true print
/// as `inf` when infinite/unbounded.
std::string bang_csv(const BangSequence& seq);

/// JSON with fields {R, n, tau_max, C_n, stability, grid}.
std::string certificate_json(const GrowthCertificate& cert);

/// JSON keyed by identity name, plus the skipped list.
std::string identity_report_json(const IdentityReport& rep);

std::string support_json(const SupportEstimate& est);

/// Deterministic 17-significant-digit number formatting shared by all writers.
std::string format_number(double v);

std::uint64_t fnv1a_hash(std::string_view data);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace dunkl

#endif
