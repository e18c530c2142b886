#pragma once

namespace hardyq {

// Shared numeric thresholds. Probabilities below zero_tolerance count as
// exact zeros ("cannot occur"); the same cutoff decides whether a run is
// quantum-possible.
inline constexpr double zero_tolerance = 1e-10;

// Unit-norm and self-consistency checks on constructed vectors.
inline constexpr double unit_norm_tolerance = 1e-12;

// A measurement family is proper iff |sin(theta)*cos(theta)| exceeds this
// on both sides, i.e. the two bases per side are non-trivially different.
inline constexpr double properness_threshold = 1e-6;

// Lower bound a genuine (non-degenerate) Hardy fraction must clear.
inline constexpr double positivity_threshold = 1e-6;

}  // namespace hardyq
