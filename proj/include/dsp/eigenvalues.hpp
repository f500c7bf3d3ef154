#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dsp/problem.hpp"

namespace dsp {

/// Selection of a sub-multiset of eigenvalues of equal cardinality m in every
/// class: counts[j][k] copies of eigenvalue slot k of class j.
struct NonGenericityRelation {
  int m = 0;
  std::vector<std::vector<int>> counts;
  friend bool operator==(const NonGenericityRelation&, const NonGenericityRelation&) = default;
};

/// Sum (additive) or product (multiplicative) of all eigenvalues with multiplicity
/// is the identity. Throws InputError on structural problems (duplicates, sizes).
bool check_consistency(const TupleProblem& problem);

/// Evaluates the selected eigenvalues (sum or product).
Eigenvalue evaluate_selection(const TupleProblem& problem, const std::vector<std::vector<int>>& counts);
/// Independent check that `rel` is a well-formed relation satisfied by the eigenvalues.
bool relation_holds(const TupleProblem& problem, const NonGenericityRelation& rel);

class SearchLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RelationSearchOptions {
  /// Bound on the number of selections enumerated per cardinality before
  /// switching to meet-in-the-middle on the two largest classes.
  std::uint64_t cap = 100'000'000;
};

/// First relation (by increasing m, then enumeration order) accepted by `accept`.
std::optional<NonGenericityRelation> find_relation(
    const TupleProblem& problem, const RelationSearchOptions& options = {},
    const std::function<bool(const NonGenericityRelation&)>& accept = {});

struct GenericityResult {
  bool generic = true;
  std::optional<NonGenericityRelation> witness;
};

GenericityResult is_generic(const TupleProblem& problem, const RelationSearchOptions& options = {});

struct ReducedProduct {
  Eigenvalue value;
  bool identity = false;
};

/// Sum or product of the eigenvalues with every multiplicity divided by `divisor`.
ReducedProduct reduced_multiplicity_product(const TupleProblem& problem, int divisor);

/// Greatest common divisor of all eigenvalue multiplicities of all classes.
int multiplicity_gcd(const std::vector<JnfShape>& shapes);

class NoGenericAssignment : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Consistent, verified-generic eigenvalues for the given shapes. Deterministic in `seed`.
TupleProblem generate_generic(const std::vector<JnfShape>& shapes, Mode mode, std::uint64_t seed = 0,
                              const RelationSearchOptions& options = {});

} // namespace dsp
