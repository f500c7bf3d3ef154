#include "dsp/problem.hpp"

#include <string>

namespace dsp {

std::vector<JnfShape> TupleProblem::shapes() const {
  std::vector<JnfShape> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.shape());
  return out;
}

void TupleProblem::validate() const {
  if (n < 1) throw InputError("n must be at least 1");
  if (classes.empty()) throw InputError("at least one conjugacy class is required");
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto& c = classes[j];
    const std::string where = "class " + std::to_string(j);
    if (c.slots.empty()) throw InputError(where + ": no eigenvalues");
    if (c.size() != n)
      throw InputError(where + ": multiplicities sum to " + std::to_string(c.size()) + ", expected n = " +
                       std::to_string(n));
    for (std::size_t k = 0; k < c.slots.size(); ++k) {
      if (mode_of(c.slots[k].value) != mode)
        throw InputError(where + ", eigenvalue " + std::to_string(k) + ": value kind does not match mode " +
                         to_string(mode));
      for (std::size_t l = 0; l < k; ++l)
        if (c.slots[l].value == c.slots[k].value)
          throw InputError(where + ": duplicate eigenvalue " + to_string(c.slots[k].value));
    }
  }
}

int common_size(const std::vector<JnfShape>& shapes) {
  if (shapes.empty()) throw InputError("empty tuple of Jordan normal forms");
  const int n = shapes.front().size();
  for (std::size_t j = 1; j < shapes.size(); ++j)
    if (shapes[j].size() != n)
      throw InputError("Jordan normal form " + std::to_string(j) + " has size " +
                       std::to_string(shapes[j].size()) + ", expected " + std::to_string(n));
  return n;
}

} // namespace dsp
