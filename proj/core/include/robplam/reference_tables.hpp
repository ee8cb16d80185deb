#pragma once

#include <span>

#include "robplam/simlab.hpp"

namespace robplam {

/// One published summary value of the Monte Carlo study.
struct ReferenceCell {
  const char* table;     // ise, ise_trim, beta1, beta2, mu
  const char* quantity;  // mise5, medise, mise_trim, medise_trim, bias, sd, mse, mean
  int component;         // 1 or 2 for eta_j / beta_j, 0 for mu
  Contamination contamination;
  int model;
  Method method;
  double value;
};

std::span<const ReferenceCell> reference_cells();

}  // namespace robplam
