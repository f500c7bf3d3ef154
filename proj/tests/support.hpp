#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dsp/criteria.hpp"
#include "dsp/eigenvalues.hpp"
#include "dsp/io.hpp"
#include "dsp/matrix.hpp"
#include "dsp/problem.hpp"
#include "dsp/witness.hpp"

namespace testing {

using namespace dsp;

inline Rational q(const std::string& s) { return parse_rational(s); }
inline Rational ratio(long a, long b) {
  Rational r{mpz_class(a), mpz_class(b)};
  r.canonicalize();
  return r;
}
inline GaussianRational g(const std::string& re, const std::string& im = "0") { return {q(re), q(im)}; }
inline Eigenvalue av(const std::string& re, const std::string& im = "0") { return g(re, im); }
inline Eigenvalue mv(const std::string& angle, const std::string& magnitude = "1") {
  return PolarValue(q(angle), q(magnitude));
}

inline ClassSpec cls(std::vector<std::pair<Eigenvalue, Partition>> slots) {
  ClassSpec c;
  for (auto& [v, p] : slots) c.slots.push_back({v, p});
  return c;
}

inline TupleProblem problem(Mode mode, std::vector<ClassSpec> classes) {
  TupleProblem p{mode, classes.front().size(), std::move(classes)};
  p.validate();
  return p;
}

inline JnfShape shape(std::vector<Partition> blocks) { return JnfShape(std::move(blocks)); }

inline Matrix mat(const std::vector<std::vector<GaussianRational>>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

inline Matrix real_mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(g(e));
  }
  return mat(out);
}

inline std::string data_path(const std::string& name) { return std::string(DSP_TEST_DATA) + "/" + name; }
inline TupleProblem load_problem(const std::string& name) { return parse_problem_text(read_file(data_path(name))); }
inline MatrixTuple load_witness(const std::string& name) { return parse_witness_text(read_file(data_path(name))); }

// Fixture instances.
inline std::vector<JnfShape> n4_shapes() {
  return {shape({{4}}), shape({{1, 1}, {2}}), shape({{1, 1}, {1, 1}})};
}
inline std::vector<JnfShape> n9_shapes() {
  return {shape({{2, 2, 1, 1}, {1, 1, 1}}), shape({{2, 2, 1, 1}, {1, 1, 1}}), shape({{2, 2, 1, 1}, {2, 1}})};
}

/// Jordan matrix with eigenvalue `label index` for each label of the shape.
inline Matrix jordan_matrix(const JnfShape& s) {
  const auto n = static_cast<std::size_t>(s.size());
  Matrix m(n, n);
  std::size_t pos = 0;
  for (std::size_t l = 0; l < s.labels(); ++l)
    for (int b : s.at(l).parts()) {
      for (int i = 0; i < b; ++i) {
        m(pos + i, pos + i) = GaussianRational(static_cast<long>(l));
        if (i + 1 < b) m(pos + i, pos + i + 1) = 1;
      }
      pos += static_cast<std::size_t>(b);
    }
  return m;
}

/// Same Jordan structure with prescribed eigenvalues per label.
inline Matrix jordan_matrix(const ClassSpec& c) {
  const auto n = static_cast<std::size_t>(c.size());
  Matrix m(n, n);
  std::size_t pos = 0;
  for (const auto& s : c.slots) {
    const GaussianRational lambda = std::holds_alternative<GaussianRational>(s.value)
                                        ? std::get<GaussianRational>(s.value)
                                        : std::get<PolarValue>(s.value).to_gaussian();
    for (int b : s.blocks.parts()) {
      for (int i = 0; i < b; ++i) {
        m(pos + i, pos + i) = lambda;
        if (i + 1 < b) m(pos + i, pos + i + 1) = 1;
      }
      pos += static_cast<std::size_t>(b);
    }
  }
  return m;
}

/// Commutant dimension by writing out X G = G X entrywise and solving.
inline std::size_t commutant_dimension_oracle(const Matrix& gm) {
  const std::size_t n = gm.rows();
  Matrix sys(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t eq = r * n + c;
      for (std::size_t k = 0; k < n; ++k) {
        sys(eq, r * n + k) += gm(k, c); // (X G)_{rc}
        sys(eq, k * n + c) -= gm(r, k); // (G X)_{rc}
      }
    }
  return null_space(sys).size();
}

// Random generation.
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Partition random_partition(Rng& rng, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int b = uniform(rng, 1, left);
    parts.push_back(b);
    left -= b;
  }
  return Partition(parts);
}

/// Partition biased towards many small blocks.
inline Partition random_partition_small(Rng& rng, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int b = std::min(left, uniform(rng, 0, 3) == 0 ? uniform(rng, 1, left) : uniform(rng, 1, 2));
    parts.push_back(b);
    left -= b;
  }
  return Partition(parts);
}

inline JnfShape random_shape(Rng& rng, int n, bool small_blocks = false) {
  std::vector<Partition> labels;
  int left = n;
  while (left > 0) {
    const int m = uniform(rng, 1, left);
    labels.push_back(small_blocks ? random_partition_small(rng, m) : random_partition(rng, m));
    left -= m;
  }
  return JnfShape(labels);
}

inline std::vector<JnfShape> random_shapes(Rng& rng, int n, int count, bool small_blocks = false) {
  std::vector<JnfShape> out;
  for (int j = 0; j < count; ++j) out.push_back(random_shape(rng, n, small_blocks));
  return out;
}

inline Rational random_rational(Rng& rng, int num, int den) {
  return ratio(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline Matrix random_matrix(Rng& rng, std::size_t n, int num = 3, int den = 2, bool complex = false) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = GaussianRational(random_rational(rng, num, den));
      if (complex) m(r, c).im = random_rational(rng, num, den);
    }
  return m;
}

/// Independent relation enumerator: every class is expanded to a list with
/// multiplicity and all index subsets of size m are tried.
inline bool brute_force_has_relation(const TupleProblem& p) {
  std::vector<std::vector<Eigenvalue>> lists;
  for (const auto& c : p.classes) {
    lists.emplace_back();
    for (const auto& s : c.slots)
      for (int k = 0; k < s.multiplicity(); ++k) lists.back().push_back(s.value);
  }
  const auto n = static_cast<std::size_t>(p.n);
  for (std::size_t m = 1; m < n; ++m) {
    // all m-subsets of {0..n-1}
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == m) {
        subsets.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    std::vector<std::size_t> pick(lists.size(), 0);
    while (true) {
      if (p.mode == Mode::additive) {
        GaussianRational sum;
        for (std::size_t j = 0; j < lists.size(); ++j)
          for (auto i : subsets[pick[j]]) sum += std::get<GaussianRational>(lists[j][i]);
        if (sum.is_zero()) return true;
      } else {
        Rational angle = 0, magnitude = 1;
        for (std::size_t j = 0; j < lists.size(); ++j)
          for (auto i : subsets[pick[j]]) {
            angle += std::get<PolarValue>(lists[j][i]).angle();
            magnitude *= std::get<PolarValue>(lists[j][i]).magnitude();
          }
        if (magnitude == 1 && angle.get_den() == 1) return true;
      }
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == subsets.size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
  }
  return false;
}

} // namespace testing
