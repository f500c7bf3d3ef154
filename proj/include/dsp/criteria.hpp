#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsp/jnf.hpp"

namespace dsp {

struct RigidityReport {
  int n = 0;
  long kappa = 0; // 2n^2 - sum d_j
  std::vector<int> d;
  std::vector<int> r;
  long sum_d = 0;
  long sum_r = 0;
  bool alpha = false; // sum d_j >= 2n^2 - 2
  bool beta = false;  // sum_{i != j} r_i >= n for every j
  bool omega = false; // sum r_j >= 2n
  std::vector<std::size_t> beta_failures;
};

RigidityReport rigidity_report(const std::vector<JnfShape>& shapes);

/// Raised when a Psi step is requested outside its domain.
class PsiUndefined : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when exhaustive tie exploration finds branches with different verdicts.
class TieVerdictConflict : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Labels with the maximal block count n - r_j, per class, in canonical order.
std::vector<std::vector<std::size_t>> psi_candidates(const std::vector<JnfShape>& shapes);

struct PsiStep {
  std::vector<JnfShape> shapes; // size n1
  std::vector<std::size_t> chosen_labels;
  int n1 = 0;
};

/// One reduction step. `choice[j]` selects the label for class j; by default the
/// canonically first label with the maximal number of blocks is used.
PsiStep psi_reduce(const std::vector<JnfShape>& shapes,
                   const std::optional<std::vector<std::size_t>>& choice = std::nullopt);

enum class PsiStatus { reached_n_equals_1, reached_omega, alpha_failed, beta_failed, n1_nonpositive };
std::string to_string(PsiStatus s);

struct PsiLevel {
  int n = 0;
  std::vector<JnfShape> shapes;
  long kappa = 0;
  std::vector<std::size_t> chosen_labels; // empty on the terminal level
  std::optional<int> n1;                  // target size of the step leaving this level
};

struct PsiTrace {
  std::vector<PsiLevel> levels;
  PsiStatus status = PsiStatus::reached_n_equals_1;
};

struct GoodOptions {
  bool exhaustive_ties = false;
};

struct GoodResult {
  bool good = false;
  PsiTrace trace;                     // canonical branch
  std::size_t branches_explored = 1;  // distinct tie outcomes visited (exhaustive mode)
};

GoodResult is_good(const std::vector<JnfShape>& shapes, const GoodOptions& options = {});

} // namespace dsp
