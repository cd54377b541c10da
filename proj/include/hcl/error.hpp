#pragma once

#include <stdexcept>
#include <string>

namespace hcl {

enum class errc {
  non_hermitian,
  no_convergence,
  shape_mismatch,
  payload_shape,
  zero_tangent,
  zero_matrix,
  bad_shape,
  not_scalar,
  not_skew,
  pairing_failure,
  bad_length,
  bad_size,
  bad_family,
  not_in_group,
  no_closed_form,
  eigenspace_violation,
  bad_sign,
  config_parse,
  write_failure,
};

const char* errc_name(errc code);

/// Single exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::non_hermitian: return "NonHermitian";
    case errc::no_convergence: return "NoConvergence";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::payload_shape: return "PayloadShape";
    case errc::zero_tangent: return "ZeroTangent";
    case errc::zero_matrix: return "ZeroMatrix";
    case errc::bad_shape: return "BadShape";
    case errc::not_scalar: return "NotScalar";
    case errc::not_skew: return "NotSkew";
    case errc::pairing_failure: return "PairingFailure";
    case errc::bad_length: return "BadLength";
    case errc::bad_size: return "BadSize";
    case errc::bad_family: return "BadFamily";
    case errc::not_in_group: return "NotInGroup";
    case errc::no_closed_form: return "NoClosedForm";
    case errc::eigenspace_violation: return "EigenspaceViolation";
    case errc::bad_sign: return "BadSign";
    case errc::config_parse: return "ConfigParse";
    case errc::write_failure: return "WriteFailure";
  }
  return "Unknown";
}

}  // namespace hcl
