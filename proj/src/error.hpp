#ifndef CURVEPI_ERROR_HPP
#define CURVEPI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curvepi {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  NeedsAlgebraicExtension,
  NonReducedBranch,
  ClusterSplits,
  BudgetExceeded,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace curvepi

#endif
