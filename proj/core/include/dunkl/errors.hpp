#ifndef DUNKL_ERRORS_HPP
#define DUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dunkl {

/// A series or stepping scheme could not certify the requested tolerance
/// within its term budget. Carries the bound that was actually achieved.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved_bound, int terms)
      : std::runtime_error(what), achieved_bound_(achieved_bound), terms_(terms) {}
  double achieved_bound() const { return achieved_bound_; }
  int terms() const { return terms_; }

 private:
  double achieved_bound_;
  int terms_;
};

/// Requested evaluation would overflow double range (e.g. e^{|Im u|} beyond
/// representable magnitude). Certified values or nothing.
class RangeError : public std::runtime_error {
 public:
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature or grid computation failed its internal convergence check.
/// Carries the measured defect.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double defect)
      : std::runtime_error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

/// Iterated coefficient arithmetic lost more mass than the configured budget.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double trim_loss, int steps_done)
      : std::runtime_error(what), trim_loss_(trim_loss), steps_done_(steps_done) {}
  double trim_loss() const { return trim_loss_; }
  int steps_done() const { return steps_done_; }

 private:
  double trim_loss_;
  int steps_done_;
};

}  // namespace dunkl

#endif
