#pragma once

#include <stdexcept>
#include <string>

namespace helixforge {

enum class Errc {
  descriptor_mismatch,
  invalid_descriptor,
  invalid_element,
  capacity_exceeded,
  invalid_embedding,
  window_too_short,
  orbit_condition,
  collinear_points,
  no_square_root,
  no_cube_root,
  region_not_specified,
  negative_index,
  identity_check_failed,
  config_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace helixforge
