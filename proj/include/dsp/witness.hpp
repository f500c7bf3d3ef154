#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsp/matrix.hpp"
#include "dsp/problem.hpp"

namespace dsp {

/// p+1 square matrices of one size; sum zero (additive) or product I (multiplicative)
/// is what verify_relation checks, not an invariant of the type.
struct MatrixTuple {
  Mode mode = Mode::additive;
  std::vector<Matrix> matrices;

  [[nodiscard]] int n() const { return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows()); }
  /// Equal square sizes; invertibility in multiplicative mode. Throws InputError.
  void validate() const;
  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;
};

/// Matrix of X -> [A, X] acting on row-major vectorizations.
Matrix adjoint_action(const Matrix& a);
/// Basis E_ab (a != b), E_aa - E_nn of the trace-zero matrices.
std::vector<Matrix> trace_zero_basis(std::size_t n);

bool verify_relation(const MatrixTuple& t);

struct MembershipReport {
  bool member = false;
  std::string reason;
};
MembershipReport check_membership(const Matrix& m, const ClassSpec& c);
inline bool class_membership(const Matrix& m, const ClassSpec& c) { return check_membership(m, c).member; }

std::size_t centralizer_dimension(std::span<const Matrix> matrices);
inline std::size_t centralizer_dimension(const MatrixTuple& t) { return centralizer_dimension(t.matrices); }

/// Surjectivity of (X_1..X_p) -> sum [A_j, X_j] from (sl_n)^p onto sl_n.
bool check_surjectivity(std::span<const Matrix> matrices);

struct IrreducibilityReport {
  bool irreducible = false;
  std::size_t algebra_dimension = 0;
};
/// Burnside: the unital algebra generated by the matrices is all of gl_n.
IrreducibilityReport is_irreducible(std::span<const Matrix> matrices);

/// sum d_j minus the rank of the linearized relation on the tangent spaces of the classes.
long local_dimension(const MatrixTuple& t, const std::vector<ClassSpec>& classes);
/// 2n^2 - sum of drops, drop_i = n^2 - dim centralizer(M_i).
long euler_characteristic(const MatrixTuple& t);

struct BlockAssembly {
  MatrixTuple tuple;
  Matrix certificate; // identity block in block position (1, copies), zeros elsewhere
  bool certificate_commutes = false;
};
BlockAssembly assemble_block_diagonal(const MatrixTuple& block, int copies);

struct DeformationRequest {
  MatrixTuple base;
  std::vector<Matrix> directions; // N_j
  Rational epsilon;
  double tolerance = 1e-12;
};

struct DeformationResult {
  MatrixTuple deformed;
  std::vector<Matrix> correction; // X_j with sum [A_j, X_j] = -sum N_j (first order)
  Matrix residual;                // sum of deformed matrices, or product minus I
  double residual_norm = 0;
  double bound_constant = 0;      // K with residual_norm <= K eps^2
  bool within_bound = false;
  bool within_tolerance = false;
};

/// doubles are dyadic rationals; the conversion is exact.
Rational exact_from_double(double x);

/// First-order deformation step on a tuple with trivial centralizer. Throws
/// std::domain_error on nontrivial centralizer or violated direction constraint.
DeformationResult deform_step(const DeformationRequest& request);

/// Explicit tuple in classes subordinate to problem's classes (at least one strictly).
struct SubordinateWitnessReport {
  bool relation = false;
  std::vector<bool> subordinate;
  std::vector<bool> strict;
  bool applicable = false; // relation holds, all subordinate, some strict
  std::string reason;
};
SubordinateWitnessReport check_subordinate_witness(const MatrixTuple& t, const TupleProblem& problem);

} // namespace dsp
