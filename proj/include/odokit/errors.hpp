#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace odokit {

enum class Errc {
  DivisibilityViolation,
  EmptyStructure,
  PointSystemMismatch,
  UnsupportedSystem,
  DefectTooLarge,
  HorizonExceeded,
  TowerInvalid,
  NotMinimalInput,
  NoReturnWithinHorizon,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message, std::size_t index = npos);

  Errc code() const noexcept { return code_; }
  // Level / position the error refers to, when meaningful.
  std::size_t index() const noexcept { return index_; }

private:
  Errc code_;
  std::size_t index_;
};

[[noreturn]] void fail(Errc code, const std::string& message,
                       std::size_t index = Error::npos);

}  // namespace odokit
