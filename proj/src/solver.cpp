#include "dsp/solver.hpp"

#include <stdexcept>

namespace dsp {

std::string to_string(Answer a) {
  switch (a) {
  case Answer::solvable: return "solvable";
  case Answer::unsolvable: return "unsolvable";
  case Answer::unknown: return "unknown";
  }
  return "unknown";
}

long expected_dimension(const TupleProblem& problem) {
  problem.validate();
  const long n = problem.n;
  return n * n + 1 - rigidity_report(problem.shapes()).kappa;
}

namespace {

void apply(Verdict& v, std::string rule, std::string description, std::string detail = {}) {
  v.justification.push_back({std::move(rule), std::move(description), std::move(detail)});
}

std::string describe(const SpecialCertificate& c) {
  return "l=" + std::to_string(c.l) + ", n1=" + std::to_string(c.n1) + (c.diagonal ? ", diagonal" : "");
}

} // namespace

Verdict classify(const TupleProblem& problem, const SolverOptions& options, const MatrixTuple* subordinate_witness) {
  problem.validate();
  if (!check_consistency(problem))
    throw InputError(problem.mode == Mode::additive ? "eigenvalues with multiplicity do not sum to 0"
                                                    : "eigenvalues with multiplicity do not multiply to 1");
  Verdict v;
  const auto shapes = problem.shapes();
  v.rigidity = rigidity_report(shapes);
  v.good = is_good(shapes, options.good);
  const long kappa = v.rigidity.kappa;

  if (problem.n == 1) {
    v.dsp = v.weak_dsp = Answer::solvable;
    v.generic = true;
    apply(v, "n_equals_one", "for n = 1 every tuple of numbers with the required sum or product is a solution");
    v.expected_dimension = expected_dimension(problem);
    return v;
  }

  try {
    const auto gen = is_generic(problem, options.relations);
    v.generic = gen.generic;
    v.relation = gen.witness;
  } catch (const SearchLimitExceeded&) {
    v.generic.reset();
  }

  if (v.generic == true) {
    v.dsp = v.weak_dsp = v.good.good ? Answer::solvable : Answer::unsolvable;
    apply(v, "generic_good_criterion",
          "for generic eigenvalues the DSP is solvable if and only if the tuple of JNFs is good; "
          "with generic eigenvalues every tuple is irreducible, so the weak DSP has the same answer",
          std::string("good: ") + (v.good.good ? "yes" : "no") + ", psi status: " + to_string(v.good.trace.status));
  } else {
    if (!v.rigidity.alpha || !v.rigidity.beta) {
      v.dsp = Answer::unsolvable;
      std::string detail = std::string("alpha: ") + (v.rigidity.alpha ? "holds" : "fails") +
                           ", beta: " + (v.rigidity.beta ? "holds" : "fails");
      apply(v, "necessary_alpha_beta", "sum d_j >= 2n^2 - 2 and sum_{i != j} r_i >= n are necessary for the DSP",
            detail);
    }
    if (kappa == 2 && !v.good.good) {
      v.dsp = v.weak_dsp = Answer::unsolvable;
      apply(v, "good_necessary_rigid", "for index of rigidity 2 goodness is necessary for the weak DSP",
            "psi status: " + to_string(v.good.trace.status));
    }
    if (kappa == 2 && v.good.good) {
      SpecialOptions sopt{options.good, options.relations};
      v.certificates = find_special_certificates(problem, sopt);
      if (!v.certificates.empty()) {
        v.dsp = Answer::unsolvable;
        apply(v, "special_not_solvable", "the DSP is not solvable for special tuples",
              "certificate " + describe(v.certificates.front()));
        for (const auto& c : v.certificates)
          if (c.diagonal) {
            v.weak_dsp = Answer::unsolvable;
            apply(v, "special_diagonal_weak_unsolvable", "the weak DSP is not solvable for special-diagonal tuples",
                  "certificate " + describe(c));
            break;
          }
      }
    }
  }

  if (subordinate_witness) {
    v.subordinate_witness = check_subordinate_witness(*subordinate_witness, problem);
    if (v.subordinate_witness->applicable && kappa == 2) {
      if (v.dsp == Answer::solvable)
        throw InputError("subordinate witness contradicts a solvable verdict; the witness or the data is inconsistent");
      v.dsp = Answer::unsolvable;
      apply(v, "subordinate_witness",
            "for index of rigidity 2, a tuple satisfying the relation in subordinate classes, one of them "
            "strictly smaller, rules out the DSP",
            "explicit witness verified");
    }
  }

  if (v.weak_dsp == Answer::unsolvable && v.dsp != Answer::unsolvable) {
    v.dsp = Answer::unsolvable;
    apply(v, "monotonicity", "solvability of the DSP implies solvability of the weak DSP");
  }
  if (v.dsp == Answer::solvable && v.weak_dsp != Answer::solvable) {
    v.weak_dsp = Answer::solvable;
    apply(v, "monotonicity", "solvability of the DSP implies solvability of the weak DSP");
  }
  if (v.weak_dsp != Answer::unsolvable) v.expected_dimension = problem.n * static_cast<long>(problem.n) + 1 - kappa;
  return v;
}

} // namespace dsp
