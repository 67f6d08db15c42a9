#pragma once

#include <stdexcept>
#include <string>

namespace latcross {

// Structured error codes surfaced by library operations and the CLI.
enum class Errc {
  mixed_alphabet,
  shape_mismatch,
  no_such_crossing,
  wrong_kind,
  improper_crossing,
  not_in_domain,
  improper_position,
  non_divisible,
  unsupported_configuration,
  condition_13_violated,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace latcross
