#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsmash/algebra.hpp"

namespace gsmash {

// Bracketing report for the representation dimension. Hinted quantities are
// echoed as externally supplied and never presented as computed.
struct BoundsReport {
  std::string algebra_id;
  bool semisimple = false;
  bool self_injective = false;
  std::size_t loewy = 0;
  std::optional<std::size_t> stable_dim_lower;
  bool stable_dim_lower_external = false;
  std::optional<std::size_t> stable_dim_upper;
  std::optional<std::size_t> odim_lower;
  std::optional<std::size_t> repdim_lower;
  std::optional<std::size_t> repdim_upper;
  std::vector<std::string> notes;
};

BoundsReport compute_bounds(AlgebraPtr a, const std::string& id,
                            std::optional<std::size_t> stable_dim_hint,
                            std::optional<std::size_t> odim_certificate);

std::string format_bounds(const BoundsReport& r);

}  // namespace gsmash
