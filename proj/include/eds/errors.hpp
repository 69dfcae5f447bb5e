#pragma once

#include <stdexcept>
#include <string>

namespace eds {

enum class errc {
  zero_a,
  not_fourth_power_free,
  point_not_on_curve,
  infinity_point,
  malformed_point,
  point_at_infinity,
  division_by_zero_psi,
  degenerate_indices,
  index_one,
  p_not_divides_bn,
  p_not_divides_n,
  torsion_point,
  tolerance_too_tight,
  index_too_small,
  not_applicable,
  positive_a,
  factorization_timeout,
  bad_input,
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace eds
