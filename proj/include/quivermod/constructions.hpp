#pragma once

#include <cstdint>
#include <string>

#include "quivermod/representation.hpp"

namespace quivermod {

/// A built-in quiver with relations and its tilting framing (d_T, θ_T).
struct FramedQuiver {
  std::string family;
  std::int64_t parameter = 0;
  PresentationPtr quiver;
  StabilityCondition framing;
};

/// Vertices {0,1}; a, c: 0 -> 1; k1..km: 1 -> 0. Relations k_i a k_j - k_j a k_i
/// and k_i c k_j - k_j c k_i for i < j, and a k_j c - c k_j a. Throws BAD_PARAMETER.
FramedQuiver build_determinantal(std::int64_t m);

/// Cyclic McKay quiver of Z/(n+1): x{i}: i -> i+1 and y{i}: i+1 -> i (indices
/// mod n+1), relation at vertex i: x{i-1}*y{i-1} - y{i}*x{i}. Throws BAD_PARAMETER.
FramedQuiver build_preprojective_affine_A(std::int64_t n);

}  // namespace quivermod
