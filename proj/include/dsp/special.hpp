#pragma once

#include <stdexcept>
#include <vector>

#include "dsp/criteria.hpp"
#include "dsp/eigenvalues.hpp"
#include "dsp/problem.hpp"

namespace dsp {

/// Witness that a kappa = 2 tuple is l-special: every class c_j has a
/// subordinate class made of n1 copies of an inner class of size l, the inner
/// JNF tuple is good, and the inner eigenvalues multiply to 1 (sum to 0).
struct SpecialCertificate {
  int l = 0;
  int n1 = 0;
  std::vector<ClassSpec> inner;       // size l, same eigenvalue order as the outer class
  std::vector<ClassSpec> subordinate; // size n, n1 copies of `inner`
  bool diagonal = false;              // all inner classes semisimple
  bool inner_tuple_good = false;
  bool inner_eigenvalue_product_identity = false;
  long inner_kappa = 0;
};

class NotRigid : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct SpecialOptions {
  GoodOptions good;
  RelationSearchOptions relations;
};

/// All certificates over every factorization n = l * n1 with n1 > 1. Empty means not special.
/// Throws NotRigid unless kappa = 2.
std::vector<SpecialCertificate> find_special_certificates(const TupleProblem& problem,
                                                          const SpecialOptions& options = {});

struct SpecialnessFlags {
  bool special = false;
  bool special_diagonal = false;
  bool quasi_generic = false;
  std::vector<SpecialCertificate> certificates;
};

SpecialnessFlags classify_specialness(const TupleProblem& problem, const SpecialOptions& options = {});

/// A relation is a multiple of the obvious one when its selection in every class
/// is t copies of the inner eigenvalue multiset, for one integer t.
bool is_obvious_relation(const SpecialCertificate& cert, const NonGenericityRelation& rel);

} // namespace dsp
