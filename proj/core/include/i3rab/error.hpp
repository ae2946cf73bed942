#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace i3rab {

// Base of every error raised by the library. `code()` is a stable
// UPPER_SNAKE identifier suitable for diagnostics and tests.
class Error : public std::runtime_error {
 public:
  Error(std::string_view code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Error carrying a module-specific enumerator alongside the textual code.
template <typename Errc>
class TypedError : public Error {
 public:
  TypedError(Errc errc, const std::string& message)
      : Error(to_string(errc), message), errc_(errc) {}

  Errc errc() const noexcept { return errc_; }

 private:
  Errc errc_;
};

}  // namespace i3rab
