#pragma once

#include <stdexcept>
#include <string>

namespace dgdual {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedInput : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct OrderTooSmall : Error {
  using Error::Error;
};
struct NotARelation : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  using Error::Error;
};
struct NotQuasicanonical : Error {
  using Error::Error;
};
struct InconsistentBlocks : Error {
  using Error::Error;
};
struct LabelMismatch : Error {
  using Error::Error;
};
struct TraceMismatch : Error {
  using Error::Error;
};
struct NotContractible : Error {
  using Error::Error;
};
struct WouldMergeParallel : Error {
  using Error::Error;
};
struct WouldCreateLoop : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct InvalidPartial : Error {
  using Error::Error;
};

}  // namespace dgdual
