#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsp/criteria.hpp"
#include "dsp/eigenvalues.hpp"
#include "dsp/problem.hpp"
#include "dsp/special.hpp"
#include "dsp/witness.hpp"

namespace dsp {

enum class Answer { solvable, unsolvable, unknown };
std::string to_string(Answer a);

struct AppliedRule {
  std::string rule;        // stable identifier, e.g. "generic_good_criterion"
  std::string description; // the statement being applied
  std::string detail;      // instance-specific evidence
};

struct Verdict {
  Answer dsp = Answer::unknown;
  Answer weak_dsp = Answer::unknown;
  std::vector<AppliedRule> justification;
  RigidityReport rigidity;
  std::optional<long> expected_dimension; // absent when the variety is known to be empty
  GoodResult good;
  std::optional<bool> generic;            // absent when the relation search hit its cap
  std::optional<NonGenericityRelation> relation;
  std::vector<SpecialCertificate> certificates;
  std::optional<SubordinateWitnessReport> subordinate_witness;
};

struct SolverOptions {
  GoodOptions good;
  RelationSearchOptions relations;
};

/// n^2 + 1 - kappa.
long expected_dimension(const TupleProblem& problem);

/// Throws InputError when the eigenvalues violate the trace/determinant condition.
Verdict classify(const TupleProblem& problem, const SolverOptions& options = {},
                 const MatrixTuple* subordinate_witness = nullptr);

} // namespace dsp
