#pragma once

#include <vector>

#include "dsp/jnf.hpp"

namespace dsp {

/// A full instance: p+1 conjugacy classes of size n, additive (sum zero) or
/// multiplicative (product identity).
struct TupleProblem {
  Mode mode = Mode::additive;
  int n = 0;
  std::vector<ClassSpec> classes;

  [[nodiscard]] std::vector<JnfShape> shapes() const;
  /// Structural checks: sizes, eigenvalue kinds, distinct eigenvalues per class.
  /// Throws InputError naming the offending class.
  void validate() const;

  friend bool operator==(const TupleProblem&, const TupleProblem&) = default;
};

/// Throws InputError unless all shapes are nonempty and of one size.
int common_size(const std::vector<JnfShape>& shapes);

} // namespace dsp
