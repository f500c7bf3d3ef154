#include "dsp/special.hpp"

#include <functional>

namespace dsp {

namespace {

// Inner partitions nu of mult / n1 whose n1-fold union lies below `outer` at this eigenvalue.
std::vector<Partition> inner_candidates(const Partition& outer, int n1) {
  std::vector<Partition> out;
  for (const auto& nu : partitions_of(outer.size() / n1))
    if (dominated_by(repeat_parts(nu, n1), outer)) out.push_back(nu);
  return out;
}

// Every inner class for c (size l) compatible with subordination, or empty if some
// multiplicity is not divisible by n1.
std::vector<ClassSpec> inner_classes(const ClassSpec& c, int n1) {
  std::vector<std::vector<Partition>> per_slot;
  for (const auto& s : c.slots) {
    if (s.multiplicity() % n1 != 0) return {};
    per_slot.push_back(inner_candidates(s.blocks, n1));
  }
  std::vector<ClassSpec> out;
  ClassSpec cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == per_slot.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& nu : per_slot[k]) {
      cur.slots.push_back({c.slots[k].value, nu});
      rec(k + 1);
      cur.slots.pop_back();
    }
  };
  rec(0);
  return out;
}

ClassSpec repeat_class(const ClassSpec& inner, int n1) {
  ClassSpec out;
  for (const auto& s : inner.slots) out.slots.push_back({s.value, repeat_parts(s.blocks, n1)});
  return out;
}

} // namespace

std::vector<SpecialCertificate> find_special_certificates(const TupleProblem& problem, const SpecialOptions& options) {
  problem.validate();
  const RigidityReport rep = rigidity_report(problem.shapes());
  if (rep.kappa != 2)
    throw NotRigid("specialness requires index of rigidity 2, got " + std::to_string(rep.kappa));

  std::vector<SpecialCertificate> certs;
  const int n = problem.n;
  for (int l = 1; l < n; ++l) {
    if (n % l != 0) continue;
    const int n1 = n / l;
    std::vector<std::vector<ClassSpec>> options_per_class;
    bool feasible = true;
    for (const auto& c : problem.classes) {
      options_per_class.push_back(inner_classes(c, n1));
      feasible = feasible && !options_per_class.back().empty();
    }
    if (!feasible) continue;

    std::vector<std::size_t> pick(problem.classes.size(), 0);
    while (true) {
      TupleProblem inner;
      inner.mode = problem.mode;
      inner.n = l;
      for (std::size_t j = 0; j < pick.size(); ++j) inner.classes.push_back(options_per_class[j][pick[j]]);

      const auto inner_shapes = inner.shapes();
      const GoodResult good = is_good(inner_shapes, options.good);
      const bool product_identity = check_consistency(inner);
      if (good.good && product_identity) {
        SpecialCertificate cert;
        cert.l = l;
        cert.n1 = n1;
        cert.inner = inner.classes;
        for (const auto& c : inner.classes) cert.subordinate.push_back(repeat_class(c, n1));
        cert.diagonal = true;
        for (const auto& s : inner_shapes) cert.diagonal = cert.diagonal && s.is_semisimple();
        cert.inner_tuple_good = true;
        cert.inner_eigenvalue_product_identity = true;
        cert.inner_kappa = rigidity_report(inner_shapes).kappa;
        certs.push_back(std::move(cert));
      }

      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == options_per_class[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
  }
  return certs;
}

bool is_obvious_relation(const SpecialCertificate& cert, const NonGenericityRelation& rel) {
  std::optional<int> t;
  for (std::size_t j = 0; j < cert.inner.size(); ++j)
    for (std::size_t k = 0; k < cert.inner[j].slots.size(); ++k) {
      const int inner_mult = cert.inner[j].slots[k].multiplicity();
      const int c = rel.counts[j][k];
      if (c % inner_mult != 0) return false;
      if (t && *t != c / inner_mult) return false;
      t = c / inner_mult;
    }
  return t.has_value() && *t >= 1 && *t < cert.n1;
}

SpecialnessFlags classify_specialness(const TupleProblem& problem, const SpecialOptions& options) {
  SpecialnessFlags flags;
  flags.certificates = find_special_certificates(problem, options);
  flags.special = !flags.certificates.empty();
  for (const auto& cert : flags.certificates) {
    if (!cert.diagonal) continue;
    flags.special_diagonal = true;
    if (flags.quasi_generic) continue;
    TupleProblem inner{problem.mode, cert.l, cert.inner};
    if (!is_generic(inner, options.relations).generic) continue;
    const auto non_obvious = find_relation(problem, options.relations, [&](const NonGenericityRelation& rel) {
      return !is_obvious_relation(cert, rel);
    });
    flags.quasi_generic = !non_obvious.has_value();
  }
  return flags;
}

} // namespace dsp
