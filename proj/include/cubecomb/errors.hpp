#pragma once

#include <stdexcept>
#include <string>

namespace cubecomb {

enum class Errc {
  NotConnected,
  NotSimple,
  NotBipartite,
  NotMedian,
  NotConvex,
  SameHyperplane,
  NotTransverse,
  NotMaximal,
  NotAutomorphism,
  InconsistentWall,
  DuplicateWall,
  NoIsomorphism,
  NonChainClass,
  ParaStructureViolation,
  ProductReconstructionFailed,
  TooLarge,
  SpacingViolated,
  NotSeparating,
  NotTransverseConsecutive,
  NotOnCarrier,
  NotGeodesic,
  InternalCheckFailed,
};

const char* errc_name(Errc c);

/// Domain error with a machine-readable code and a witness/detail string.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, std::string detail = "") {
  throw Error(code, std::move(detail));
}

}  // namespace cubecomb
