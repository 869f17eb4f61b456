#pragma once

#include <stdexcept>
#include <string>

namespace posmap {

// Failure conditions surfaced by the library. Each value has a stable name
// used in CLI error reports and tested against in the unit suites.
enum class Errc {
  NotSquare,
  NotHermitian,
  NotUnitary,
  NotPsd,
  DimensionMismatch,
  ShapeMismatch,
  ZeroVector,
  ZeroMatrix,
  IndexOutOfRange,
  PurificationMismatch,
  InputIsPpt,
  IsPsd,
  DiagBlockNotPsd,
  ConditionViolated,
  NotHermitianPreserving,
  NotCp,
  NotTp,
  MapIsCp,
  UnknownFamily,
  MissingParam,
  ParamOutOfDomain,
  BadFile,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace posmap
