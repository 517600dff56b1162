#pragma once

#include <stdexcept>
#include <string>

namespace afd {

enum class ErrorKind {
  invalid_argument,
  not_square,
  not_converged,
  singular,
  no_principal_log,
  unsupported,
  enumeration_cap,
  ill_conditioned,
  not_stochastic,
  reducible,
  not_circulant,
  rank_mismatch,
  not_generator,
  not_commuting,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; callers
// that need to branch on the failure inspect kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace afd
