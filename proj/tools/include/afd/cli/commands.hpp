#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace afd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failed or internal error
inline constexpr int kExitInput = 2;   // parse failure, malformed input, shape mismatch
inline constexpr int kExitMatrix = 3;  // non-stochastic or singular matrix

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kDefaultCmax = 12;

/// Grid "lo:hi:n" with n >= 1 points including both ends; "pi" and "-pi"
/// are accepted as endpoints.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;
  double at(int i) const;
};
Range parse_range(const std::string& text);

struct ScanRow {
  double s = 0.0;
  double t = 0.0;
  bool nonneg = false;
  bool i3_limit = false;
  bool c3_suff = false;
  bool c3sq_suff = false;
  bool boundary = false;
};

/// Grid points in s-major order, computed on `threads` workers.
std::vector<ScanRow> scan_circulant(const Range& s, const Range& t, unsigned threads);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afd::cli
