#pragma once

#include <stdexcept>
#include <string>

namespace eikonal {

enum class Errc {
  structural,
  degenerate,
  domain,
  range,
  unreachable,
  argument,
  validation,
  parse,
  precondition,
  contract,
  nonmonotone_hamiltonian,
  no_subsolution,
  coercivity,
  divergence,
};

const char* to_string(Errc code);

/// Single exception type for the library; `code()` tells callers (the CLI in
/// particular) which failure class they are looking at.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eikonal
