#include "dsp/eigenvalues.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace dsp {

namespace {

template <typename V>
const V& value_as(const Eigenvalue& e) {
  return std::get<V>(e);
}

template <typename V>
V identity_of() {
  return group_identity(V{});
}

template <typename V>
V total(const TupleProblem& problem, const std::vector<std::vector<int>>& counts) {
  V acc = identity_of<V>();
  for (std::size_t j = 0; j < problem.classes.size(); ++j)
    for (std::size_t k = 0; k < problem.classes[j].slots.size(); ++k)
      if (counts[j][k] != 0)
        acc = group_combine(acc, group_power(value_as<V>(problem.classes[j].slots[k].value), counts[j][k]));
  return acc;
}

std::vector<std::vector<int>> full_counts(const TupleProblem& problem) {
  std::vector<std::vector<int>> counts;
  for (const auto& c : problem.classes) {
    std::vector<int> row;
    for (const auto& s : c.slots) row.push_back(s.multiplicity());
    counts.push_back(std::move(row));
  }
  return counts;
}

} // namespace

bool check_consistency(const TupleProblem& problem) {
  problem.validate();
  const auto counts = full_counts(problem);
  if (problem.mode == Mode::additive) return total<GaussianRational>(problem, counts).is_zero();
  return total<PolarValue>(problem, counts).is_one();
}

Eigenvalue evaluate_selection(const TupleProblem& problem, const std::vector<std::vector<int>>& counts) {
  if (counts.size() != problem.classes.size()) throw std::invalid_argument("selection has wrong number of classes");
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j].size() != problem.classes[j].slots.size())
      throw std::invalid_argument("selection has wrong number of slots in class " + std::to_string(j));
  if (problem.mode == Mode::additive) return total<GaussianRational>(problem, counts);
  return total<PolarValue>(problem, counts);
}

bool relation_holds(const TupleProblem& problem, const NonGenericityRelation& rel) {
  if (rel.m < 1 || rel.m >= problem.n || rel.counts.size() != problem.classes.size()) return false;
  for (std::size_t j = 0; j < rel.counts.size(); ++j) {
    const auto& slots = problem.classes[j].slots;
    if (rel.counts[j].size() != slots.size()) return false;
    int sum = 0;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (rel.counts[j][k] < 0 || rel.counts[j][k] > slots[k].multiplicity()) return false;
      sum += rel.counts[j][k];
    }
    if (sum != rel.m) return false;
  }
  const Eigenvalue v = evaluate_selection(problem, rel.counts);
  return std::visit([](const auto& x) { return group_is_identity(x); }, v);
}

namespace {

template <typename V>
struct Option {
  std::vector<int> counts;
  V value;
};

// Sub-multisets of size m of one class, earlier slots taken greedily first.
template <typename V>
std::vector<Option<V>> class_options(const ClassSpec& c, int m) {
  std::vector<Option<V>> out;
  std::vector<int> counts(c.slots.size(), 0);
  std::function<void(std::size_t, int, V)> rec = [&](std::size_t k, int rest, V acc) {
    if (k == c.slots.size()) {
      if (rest == 0) out.push_back({counts, acc});
      return;
    }
    const int cap = std::min(rest, c.slots[k].multiplicity());
    for (int t = cap; t >= 0; --t) {
      counts[k] = t;
      V next = t == 0 ? acc : group_combine(acc, group_power(value_as<V>(c.slots[k].value), t));
      rec(k + 1, rest - t, std::move(next));
    }
    counts[k] = 0;
  };
  rec(0, m, identity_of<V>());
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

template <typename V>
std::optional<NonGenericityRelation> search_cardinality(
    const TupleProblem& problem, int m, const RelationSearchOptions& options,
    const std::function<bool(const NonGenericityRelation&)>& accept) {
  const std::size_t classes = problem.classes.size();
  std::vector<std::vector<Option<V>>> lists;
  for (const auto& c : problem.classes) lists.push_back(class_options<V>(c, m));

  std::uint64_t all = 1;
  for (const auto& l : lists) all = saturating_mul(all, l.size());

  std::vector<std::size_t> by_size(classes);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return lists[a].size() > lists[b].size(); });

  // Classes folded into the lookup table; the remaining ones are enumerated.
  std::vector<std::size_t> lookup{by_size[0]};
  if (all > options.cap && classes >= 2) lookup.push_back(by_size[1]);
  std::sort(lookup.begin(), lookup.end());
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < classes; ++j)
    if (std::find(lookup.begin(), lookup.end(), j) == lookup.end()) rest.push_back(j);

  std::uint64_t table_size = 1;
  for (auto j : lookup) table_size = saturating_mul(table_size, lists[j].size());
  std::uint64_t rest_size = 1;
  for (auto j : rest) rest_size = saturating_mul(rest_size, lists[j].size());
  if (all > options.cap && (table_size > options.cap || rest_size > options.cap))
    throw SearchLimitExceeded("relation search at cardinality " + std::to_string(m) + " exceeds the cap of " +
                              std::to_string(options.cap) + " selections");

  // value -> list of index tuples over the lookup classes
  std::map<V, std::vector<std::vector<std::size_t>>> table;
  {
    std::vector<std::size_t> idx(lookup.size(), 0);
    std::function<void(std::size_t, V)> fill = [&](std::size_t pos, V acc) {
      if (pos == lookup.size()) {
        table[acc].push_back(idx);
        return;
      }
      const auto& l = lists[lookup[pos]];
      for (std::size_t i = 0; i < l.size(); ++i) {
        idx[pos] = i;
        fill(pos + 1, group_combine(acc, l[i].value));
      }
    };
    fill(0, identity_of<V>());
  }

  std::vector<std::size_t> ridx(rest.size(), 0);
  std::optional<NonGenericityRelation> found;
  std::function<bool(std::size_t, V)> walk = [&](std::size_t pos, V acc) -> bool {
    if (pos == rest.size()) {
      auto it = table.find(group_inverse(acc));
      if (it == table.end()) return false;
      for (const auto& lidx : it->second) {
        NonGenericityRelation rel;
        rel.m = m;
        rel.counts.resize(classes);
        for (std::size_t q = 0; q < rest.size(); ++q) rel.counts[rest[q]] = lists[rest[q]][ridx[q]].counts;
        for (std::size_t q = 0; q < lookup.size(); ++q) rel.counts[lookup[q]] = lists[lookup[q]][lidx[q]].counts;
        if (!accept || accept(rel)) {
          found = std::move(rel);
          return true;
        }
      }
      return false;
    }
    const auto& l = lists[rest[pos]];
    for (std::size_t i = 0; i < l.size(); ++i) {
      ridx[pos] = i;
      if (walk(pos + 1, group_combine(acc, l[i].value))) return true;
    }
    return false;
  };
  walk(0, identity_of<V>());
  return found;
}

} // namespace

std::optional<NonGenericityRelation> find_relation(const TupleProblem& problem, const RelationSearchOptions& options,
                                                   const std::function<bool(const NonGenericityRelation&)>& accept) {
  problem.validate();
  for (int m = 1; m < problem.n; ++m) {
    auto rel = problem.mode == Mode::additive
                   ? search_cardinality<GaussianRational>(problem, m, options, accept)
                   : search_cardinality<PolarValue>(problem, m, options, accept);
    if (rel) return rel;
  }
  return std::nullopt;
}

GenericityResult is_generic(const TupleProblem& problem, const RelationSearchOptions& options) {
  GenericityResult res;
  res.witness = find_relation(problem, options);
  res.generic = !res.witness.has_value();
  return res;
}

ReducedProduct reduced_multiplicity_product(const TupleProblem& problem, int divisor) {
  problem.validate();
  if (divisor < 1) throw InputError("divisor must be positive");
  auto counts = full_counts(problem);
  for (std::size_t j = 0; j < counts.size(); ++j)
    for (std::size_t k = 0; k < counts[j].size(); ++k) {
      if (counts[j][k] % divisor != 0)
        throw InputError("multiplicity " + std::to_string(counts[j][k]) + " of eigenvalue " + std::to_string(k) +
                         " in class " + std::to_string(j) + " is not divisible by " + std::to_string(divisor));
      counts[j][k] /= divisor;
    }
  ReducedProduct out;
  out.value = evaluate_selection(problem, counts);
  out.identity = std::visit([](const auto& x) { return group_is_identity(x); }, out.value);
  return out;
}

int multiplicity_gcd(const std::vector<JnfShape>& shapes) {
  int g = 0;
  for (const auto& s : shapes)
    for (const auto& p : s.blocks()) g = std::gcd(g, p.size());
  return g;
}

namespace {

constexpr long kPrimes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063, 1069,
                            1087, 1091, 1093, 1097, 1103, 1109, 1117, 1123, 1129, 1151, 1153, 1163};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::size_t> den(0, std::size(kPrimes) - 1);
  Rational q(mpz_class(num(rng)), mpz_class(kPrimes[den(rng)]));
  q.canonicalize();
  return q;
}

Rational random_angle(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> den(0, std::size(kPrimes) - 1);
  const long d = kPrimes[den(rng)];
  std::uniform_int_distribution<long> num(1, d - 1);
  Rational q(mpz_class(num(rng)), mpz_class(d));
  q.canonicalize();
  return q;
}

} // namespace

TupleProblem generate_generic(const std::vector<JnfShape>& shapes, Mode mode, std::uint64_t seed,
                              const RelationSearchOptions& options) {
  const int n = common_size(shapes);
  if (mode == Mode::additive && multiplicity_gcd(shapes) > 1)
    throw NoGenericAssignment("impossible: every multiplicity is divisible by " +
                              std::to_string(multiplicity_gcd(shapes)) +
                              ", so the trace condition forces a non-genericity relation");

  // The last slot of the last class absorbs the consistency condition.
  const std::size_t last_class = shapes.size() - 1;
  const std::size_t last_slot = shapes[last_class].labels() - 1;
  const long last_mult = shapes[last_class].at(last_slot).size();

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 256;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    TupleProblem p;
    p.mode = mode;
    p.n = n;
    Rational weighted = 0; // sum of multiplicity * value (or angle) excluding the last slot
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      ClassSpec c;
      for (std::size_t l = 0; l < shapes[j].labels(); ++l) {
        const bool absorbing = j == last_class && l == last_slot;
        const long mult = shapes[j].at(l).size();
        if (mode == Mode::additive) {
          Rational v = absorbing ? Rational(-weighted / last_mult) : random_rational(rng);
          if (!absorbing) weighted += v * mult;
          c.slots.push_back({GaussianRational(v), shapes[j].at(l)});
        } else {
          // Total angle exactly 1: reduced products by any common divisor d > 1 are never 1.
          Rational a = absorbing ? Rational((1 - weighted) / last_mult) : random_angle(rng);
          if (!absorbing) weighted += a * mult;
          c.slots.push_back({PolarValue(a, 1), shapes[j].at(l)});
        }
      }
      p.classes.push_back(std::move(c));
    }
    bool distinct = true;
    for (const auto& c : p.classes)
      for (std::size_t a = 0; a < c.slots.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) distinct = distinct && !(c.slots[a].value == c.slots[b].value);
    if (!distinct) continue;
    if (!check_consistency(p)) throw std::logic_error("generated eigenvalues violate the consistency condition");
    if (is_generic(p, options).generic) return p;
  }
  throw std::runtime_error("no generic eigenvalue assignment found within " + std::to_string(kAttempts) +
                           " attempts");
}

} // namespace dsp
