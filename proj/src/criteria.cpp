#include "dsp/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dsp/problem.hpp"

namespace dsp {

RigidityReport rigidity_report(const std::vector<JnfShape>& shapes) {
  RigidityReport rep;
  rep.n = common_size(shapes);
  const long n = rep.n;
  for (const auto& j : shapes) {
    rep.d.push_back(d_of(j));
    rep.r.push_back(r_of(j));
    rep.sum_d += rep.d.back();
    rep.sum_r += rep.r.back();
  }
  rep.kappa = 2 * n * n - rep.sum_d;
  rep.alpha = rep.sum_d >= 2 * n * n - 2;
  for (std::size_t j = 0; j < shapes.size(); ++j)
    if (rep.sum_r - rep.r[j] < n) rep.beta_failures.push_back(j);
  rep.beta = rep.beta_failures.empty();
  rep.omega = rep.sum_r >= 2 * n;
  return rep;
}

std::vector<std::vector<std::size_t>> psi_candidates(const std::vector<JnfShape>& shapes) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& j : shapes) {
    std::size_t most = 0;
    for (const auto& p : j.blocks()) most = std::max(most, p.length());
    std::vector<std::size_t> labels;
    for (std::size_t l = 0; l < j.labels(); ++l)
      if (j.at(l).length() == most) labels.push_back(l);
    out.push_back(std::move(labels));
  }
  return out;
}

namespace {

// Decrements the `count` smallest blocks of `label`; drops zero blocks and empty labels.
JnfShape decrement_smallest(const JnfShape& shape, std::size_t label, int count) {
  std::vector<Partition> blocks;
  for (std::size_t l = 0; l < shape.labels(); ++l) {
    if (l != label) {
      blocks.push_back(shape.at(l));
      continue;
    }
    std::vector<int> parts = shape.at(l).parts(); // descending; the smallest are last
    for (int i = 0; i < count; ++i) --parts[parts.size() - 1 - static_cast<std::size_t>(i)];
    std::erase(parts, 0);
    if (!parts.empty()) blocks.emplace_back(std::move(parts));
  }
  return JnfShape(std::move(blocks));
}

} // namespace

PsiStep psi_reduce(const std::vector<JnfShape>& shapes, const std::optional<std::vector<std::size_t>>& choice) {
  const RigidityReport rep = rigidity_report(shapes);
  const int n = rep.n;
  if (n <= 1) throw PsiUndefined("Psi needs n > 1");
  if (!rep.alpha) throw PsiUndefined("Psi undefined: condition alpha fails");
  if (!rep.beta) throw PsiUndefined("Psi undefined: condition beta fails for class " +
                                    std::to_string(rep.beta_failures.front()));
  if (rep.omega) throw PsiUndefined("Psi undefined: condition omega holds");
  const long n1 = rep.sum_r - n;
  if (n1 < 1 || n1 >= n) throw PsiUndefined("Psi undefined: target size " + std::to_string(n1) + " out of range");

  const auto candidates = psi_candidates(shapes);
  PsiStep step;
  step.n1 = static_cast<int>(n1);
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    std::size_t label = candidates[j].front();
    if (choice) {
      if (choice->size() != shapes.size()) throw PsiUndefined("Psi choice has wrong number of entries");
      label = (*choice)[j];
      if (std::find(candidates[j].begin(), candidates[j].end(), label) == candidates[j].end())
        throw PsiUndefined("label " + std::to_string(label) + " of class " + std::to_string(j) +
                           " does not carry the maximal number of blocks");
    }
    step.chosen_labels.push_back(label);
    step.shapes.push_back(decrement_smallest(shapes[j], label, n - static_cast<int>(n1)));
  }
  return step;
}

std::string to_string(PsiStatus s) {
  switch (s) {
  case PsiStatus::reached_n_equals_1: return "reached_n_equals_1";
  case PsiStatus::reached_omega: return "reached_omega";
  case PsiStatus::alpha_failed: return "alpha_failed";
  case PsiStatus::beta_failed: return "beta_failed";
  case PsiStatus::n1_nonpositive: return "n1_nonpositive";
  }
  return "unknown";
}

namespace {

using CanonicalKey = std::vector<JnfShape>;

CanonicalKey canonical_key(const std::vector<JnfShape>& shapes) {
  CanonicalKey key;
  for (const auto& s : shapes) key.push_back(s.canonical());
  return key;
}

struct Explorer {
  std::map<CanonicalKey, bool> memo;
  std::size_t visited = 0;

  // Verdict of the reduction chain below this level, taken over every tie choice.
  bool verdict(const std::vector<JnfShape>& shapes) {
    const CanonicalKey key = canonical_key(shapes);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ++visited;
    const bool v = compute(shapes);
    memo.emplace(key, v);
    return v;
  }

  bool compute(const std::vector<JnfShape>& shapes) {
    const RigidityReport rep = rigidity_report(shapes);
    if (rep.n == 1) return true;
    if (!rep.beta) return false;
    if (rep.omega) return true;
    if (rep.sum_r - rep.n <= 0) return false;

    // Distinct outcomes per class; equal partitions under different labels coincide.
    const auto candidates = psi_candidates(shapes);
    std::vector<std::vector<std::size_t>> distinct(shapes.size());
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      std::set<Partition> seen;
      for (auto l : candidates[j])
        if (seen.insert(shapes[j].at(l)).second) distinct[j].push_back(l);
    }
    std::vector<std::size_t> pick(shapes.size(), 0);
    std::optional<bool> agreed;
    while (true) {
      std::vector<std::size_t> choice(shapes.size());
      for (std::size_t j = 0; j < shapes.size(); ++j) choice[j] = distinct[j][pick[j]];
      const bool v = verdict(psi_reduce(shapes, choice).shapes);
      if (agreed && *agreed != v) throw TieVerdictConflict("Psi tie choices lead to different verdicts");
      agreed = v;
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == distinct[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
    return *agreed;
  }
};

} // namespace

GoodResult is_good(const std::vector<JnfShape>& shapes, const GoodOptions& options) {
  GoodResult res;
  std::vector<JnfShape> cur = shapes;
  RigidityReport rep = rigidity_report(cur);
  auto push_level = [&](const RigidityReport& r) {
    res.trace.levels.push_back(PsiLevel{r.n, cur, r.kappa, {}, std::nullopt});
  };
  push_level(rep);
  auto finish = [&](PsiStatus s, bool good) {
    res.trace.status = s;
    res.good = good;
  };

  if (rep.n == 1) {
    finish(PsiStatus::reached_n_equals_1, true);
  } else if (!rep.alpha) {
    finish(PsiStatus::alpha_failed, false);
  } else {
    while (true) {
      if (rep.n == 1) {
        finish(PsiStatus::reached_n_equals_1, true);
        break;
      }
      if (!rep.beta) {
        finish(PsiStatus::beta_failed, false);
        break;
      }
      if (rep.omega) {
        finish(PsiStatus::reached_omega, true);
        break;
      }
      if (rep.sum_r - rep.n <= 0) {
        finish(PsiStatus::n1_nonpositive, false);
        break;
      }
      PsiStep step = psi_reduce(cur);
      res.trace.levels.back().chosen_labels = step.chosen_labels;
      res.trace.levels.back().n1 = step.n1;
      cur = std::move(step.shapes);
      rep = rigidity_report(cur);
      push_level(rep);
    }
  }

  if (options.exhaustive_ties && res.trace.levels.front().n > 1 && res.trace.status != PsiStatus::alpha_failed) {
    Explorer ex;
    const bool all = ex.verdict(shapes);
    res.branches_explored = ex.visited;
    if (all != res.good) throw TieVerdictConflict("exhaustive Psi exploration disagrees with the canonical branch");
  }
  return res;
}

} // namespace dsp
