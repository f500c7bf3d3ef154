#include "dsp/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace dsp {

void MatrixTuple::validate() const {
  if (matrices.empty()) throw InputError("matrix tuple is empty");
  const std::size_t n = matrices.front().rows();
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    if (!matrices[j].is_square() || matrices[j].rows() != n)
      throw InputError("matrix " + std::to_string(j) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    if (mode == Mode::multiplicative && determinant(matrices[j]).is_zero())
      throw InputError("matrix " + std::to_string(j) + " is singular in multiplicative mode");
  }
}

Matrix adjoint_action(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix ad(n * n, n * n);
  // [A, X]_{rc} = sum_k A_{rk} X_{kc} - X_{rk} A_{kc}
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k) {
        ad(r * n + c, k * n + c) += a(r, k);
        ad(r * n + c, r * n + k) -= a(k, c);
      }
  return ad;
}

std::vector<Matrix> trace_zero_basis(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) basis.push_back(Matrix::unit(n, a, b));
  for (std::size_t a = 0; a + 1 < n; ++a) basis.push_back(Matrix::unit(n, a, a) - Matrix::unit(n, n - 1, n - 1));
  return basis;
}

bool verify_relation(const MatrixTuple& t) {
  t.validate();
  const std::size_t n = static_cast<std::size_t>(t.n());
  if (t.mode == Mode::additive) {
    Matrix sum(n, n);
    for (const auto& a : t.matrices) sum += a;
    return sum.is_zero();
  }
  Matrix prod = Matrix::identity(n);
  for (const auto& m : t.matrices) prod = prod * m;
  return prod == Matrix::identity(n);
}

namespace {

GaussianRational gaussian_value(const Eigenvalue& e) {
  if (const auto* z = std::get_if<GaussianRational>(&e)) return *z;
  return std::get<PolarValue>(e).to_gaussian();
}

// Columns: images of the unit matrices E_cd under the linearized relation at block j.
Matrix linearized_relation(const MatrixTuple& t) {
  const std::size_t n = static_cast<std::size_t>(t.n());
  const std::size_t count = t.matrices.size();
  Matrix map(n * n, n * n * count);
  if (t.mode == Mode::additive) {
    for (std::size_t j = 0; j < count; ++j) {
      const Matrix ad = adjoint_action(t.matrices[j]);
      for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t c = 0; c < n * n; ++c) map(r, j * n * n + c) = ad(r, c);
    }
    return map;
  }
  // d/de of prod (M_j + e [M_j, Y_j]) = sum_j P_{<j} [M_j, Y_j] P_{>j}
  for (std::size_t j = 0; j < count; ++j) {
    Matrix before = Matrix::identity(n);
    for (std::size_t i = 0; i < j; ++i) before = before * t.matrices[i];
    Matrix after = Matrix::identity(n);
    for (std::size_t i = j + 1; i < count; ++i) after = after * t.matrices[i];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Matrix image = before * commutator(t.matrices[j], Matrix::unit(n, a, b)) * after;
        for (std::size_t r = 0; r < n * n; ++r) map(r, j * n * n + a * n + b) = image.flat()[r];
      }
  }
  return map;
}

} // namespace

MembershipReport check_membership(const Matrix& m, const ClassSpec& c) {
  if (!m.is_square() || static_cast<int>(m.rows()) != c.size())
    return {false, "matrix size does not match class size " + std::to_string(c.size())};
  const std::size_t n = m.rows();
  const JnfShape shape = c.shape();
  for (std::size_t l = 0; l < c.slots.size(); ++l) {
    const RankSequence expected = rank_sequence(shape, l);
    const Matrix shifted = m - Matrix::scalar(n, gaussian_value(c.slots[l].value));
    Matrix pw = Matrix::identity(n);
    const int top = c.slots[l].blocks.largest() + 1;
    for (int k = 1; k <= top; ++k) {
      pw = pw * shifted;
      const auto rk = static_cast<int>(rank(pw));
      if (rk != expected.at(k))
        return {false, "rank of (M - " + to_string(c.slots[l].value) + " I)^" + std::to_string(k) + " is " +
                           std::to_string(rk) + ", expected " + std::to_string(expected.at(k))};
    }
  }
  return {true, {}};
}

std::size_t centralizer_dimension(std::span<const Matrix> matrices) {
  if (matrices.empty()) throw InputError("centralizer of an empty tuple");
  const std::size_t n = matrices.front().rows();
  Matrix system(n * n * matrices.size(), n * n);
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    if (matrices[j].rows() != n || !matrices[j].is_square()) throw InputError("matrices have different sizes");
    const Matrix ad = adjoint_action(matrices[j]);
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c < n * n; ++c) system(j * n * n + r, c) = ad(r, c);
  }
  return n * n - rank(system);
}

bool check_surjectivity(std::span<const Matrix> matrices) {
  if (matrices.empty()) throw InputError("surjectivity check needs at least one matrix");
  const std::size_t n = matrices.front().rows();
  const auto basis = trace_zero_basis(n);
  Matrix map(n * n, basis.size() * matrices.size());
  for (std::size_t j = 0; j < matrices.size(); ++j)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Matrix image = commutator(matrices[j], basis[b]);
      for (std::size_t r = 0; r < n * n; ++r) map(r, j * basis.size() + b) = image.flat()[r];
    }
  return rank(map) == n * n - 1;
}

IrreducibilityReport is_irreducible(std::span<const Matrix> matrices) {
  if (matrices.empty()) throw InputError("irreducibility of an empty tuple");
  const std::size_t n = matrices.front().rows();
  SpanBasis algebra(n * n);
  std::vector<Matrix> frontier{Matrix::identity(n)};
  algebra.insert({frontier.front().flat().begin(), frontier.front().flat().end()});
  while (!frontier.empty() && algebra.size() < n * n) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : matrices) {
        Matrix prod = g * w;
        if (algebra.insert({prod.flat().begin(), prod.flat().end()})) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return {algebra.size() == n * n, algebra.size()};
}

long local_dimension(const MatrixTuple& t, const std::vector<ClassSpec>& classes) {
  if (!verify_relation(t)) throw std::domain_error("witness does not satisfy the defining relation");
  if (classes.size() != t.matrices.size()) throw std::domain_error("number of classes differs from tuple length");
  long sum_d = 0;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto mem = check_membership(t.matrices[j], classes[j]);
    if (!mem.member) throw std::domain_error("matrix " + std::to_string(j) + " is not in its class: " + mem.reason);
    sum_d += d_of(classes[j].shape());
  }
  return sum_d - static_cast<long>(rank(linearized_relation(t)));
}

long euler_characteristic(const MatrixTuple& t) {
  t.validate();
  const long n2 = static_cast<long>(t.n()) * t.n();
  long chi = 2 * n2;
  for (const auto& m : t.matrices) chi -= n2 - static_cast<long>(centralizer_dimension(std::span<const Matrix>(&m, 1)));
  return chi;
}

BlockAssembly assemble_block_diagonal(const MatrixTuple& block, int copies) {
  if (copies < 1) throw InputError("number of copies must be positive");
  if (!verify_relation(block)) throw std::domain_error("block tuple does not satisfy the defining relation");
  const std::size_t l = static_cast<std::size_t>(block.n());
  const std::size_t n = l * static_cast<std::size_t>(copies);
  BlockAssembly out;
  out.tuple.mode = block.mode;
  for (const auto& b : block.matrices) {
    Matrix big(n, n);
    for (std::size_t c = 0; c < static_cast<std::size_t>(copies); ++c)
      for (std::size_t r = 0; r < l; ++r)
        for (std::size_t s = 0; s < l; ++s) big(c * l + r, c * l + s) = b(r, s);
    out.tuple.matrices.push_back(std::move(big));
  }
  out.certificate = Matrix(n, n);
  const std::size_t col0 = (static_cast<std::size_t>(copies) - 1) * l;
  for (std::size_t r = 0; r < l; ++r) out.certificate(r, col0 + r) = 1;
  out.certificate_commutes = true;
  for (const auto& m : out.tuple.matrices)
    out.certificate_commutes = out.certificate_commutes && commutator(m, out.certificate).is_zero();
  return out;
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("epsilon must be finite");
  Rational q(x);
  return q;
}

namespace {

// crude Frobenius bound on (I+eX)^{-1}(A+eN)(I+eX) - A - e([A,X]+N), divided by e^2
double conjugation_remainder_constant(double a, double x, double nn, double e) {
  const double ex = e * x;
  if (ex >= 1) return INFINITY;
  return 2 * nn * x + x * x * a + x * x * (a + e * nn) * (1 + ex) / (1 - ex) + e * x * x * nn;
}

} // namespace

DeformationResult deform_step(const DeformationRequest& req) {
  const MatrixTuple& base = req.base;
  if (!verify_relation(base)) throw std::domain_error("base tuple does not satisfy the defining relation");
  if (req.directions.size() != base.matrices.size())
    throw std::domain_error("number of directions differs from tuple length");
  const std::size_t n = static_cast<std::size_t>(base.n());
  for (const auto& d : req.directions)
    if (d.rows() != n || d.cols() != n) throw std::domain_error("direction matrix has wrong size");
  if (centralizer_dimension(base) != 1) throw std::domain_error("base tuple has a nontrivial centralizer");

  const std::size_t count = base.matrices.size();
  std::vector<Matrix> before(count, Matrix::identity(n)), after(count, Matrix::identity(n));
  for (std::size_t j = 1; j < count; ++j) before[j] = before[j - 1] * base.matrices[j - 1];
  for (std::size_t j = count - 1; j-- > 0;) after[j] = base.matrices[j + 1] * after[j + 1];

  // first-order change of the relation: sum N_j, or sum P_{<j} N_j P_{>j}
  Matrix drift(n, n);
  GaussianRational constraint;
  for (std::size_t j = 0; j < count; ++j) {
    if (base.mode == Mode::additive) {
      drift += req.directions[j];
      constraint += req.directions[j].trace();
    } else {
      drift += before[j] * req.directions[j] * after[j];
      constraint += (*inverse(base.matrices[j]) * req.directions[j]).trace();
    }
  }
  if (!constraint.is_zero())
    throw std::domain_error(base.mode == Mode::additive ? "directions violate tr(sum N_j) = 0"
                                                        : "directions violate sum tr(M_j^{-1} N_j) = 0");

  const auto basis = trace_zero_basis(n);
  Matrix system(n * n, basis.size() * count);
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Matrix image = commutator(base.matrices[j], basis[b]);
      if (base.mode == Mode::multiplicative) image = before[j] * image * after[j];
      for (std::size_t r = 0; r < n * n; ++r) system(r, j * basis.size() + b) = image.flat()[r];
    }
  const Matrix rhs = -drift;
  const auto coeffs = solve(system, rhs.flat());
  if (!coeffs) throw std::domain_error("first-order correction system is unsolvable");

  DeformationResult out;
  out.deformed.mode = base.mode;
  const Rational& eps = req.epsilon;
  const GaussianRational e(eps);
  const double ed = std::abs(to_double(eps));
  std::vector<double> remainder_const;
  for (std::size_t j = 0; j < count; ++j) {
    Matrix x(n, n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!(*coeffs)[j * basis.size() + b].is_zero()) x += basis[b] * (*coeffs)[j * basis.size() + b];
    const Matrix gauge = Matrix::identity(n) + x * e;
    const auto gauge_inv = inverse(gauge);
    if (!gauge_inv) throw std::domain_error("I + eps X_j is singular; epsilon too large");
    out.deformed.matrices.push_back(*gauge_inv * (base.matrices[j] + req.directions[j] * e) * gauge);
    remainder_const.push_back(conjugation_remainder_constant(frobenius_norm(base.matrices[j]), frobenius_norm(x),
                                                             frobenius_norm(req.directions[j]), ed));
    out.correction.push_back(std::move(x));
  }

  double bound = 0;
  if (base.mode == Mode::additive) {
    out.residual = Matrix(n, n);
    for (const auto& m : out.deformed.matrices) out.residual += m;
    for (double c : remainder_const) bound += c;
  } else {
    out.residual = Matrix::identity(n);
    for (const auto& m : out.deformed.matrices) out.residual = out.residual * m;
    out.residual -= Matrix::identity(n);
    // Majorant of prod (M_j + E_j) - prod M_j - (first-order part), E_j = e D_j + R_j.
    std::vector<double> a(count), err(count);
    for (std::size_t j = 0; j < count; ++j) {
      a[j] = frobenius_norm(base.matrices[j]);
      const double first = frobenius_norm(commutator(base.matrices[j], out.correction[j]) + req.directions[j]);
      err[j] = ed * first + ed * ed * remainder_const[j];
    }
    double prod_a = 1, prod_ae = 1, linear_e = 0, linear_r = 0;
    for (std::size_t j = 0; j < count; ++j) {
      double others = 1;
      for (std::size_t i = 0; i < count; ++i)
        if (i != j) others *= a[i];
      linear_e += err[j] * others;
      linear_r += remainder_const[j] * others;
      prod_a *= a[j];
      prod_ae *= a[j] + err[j];
    }
    const double higher = prod_ae - prod_a - linear_e;
    bound = linear_r + (ed > 0 ? higher / (ed * ed) : 0);
  }
  out.residual_norm = frobenius_norm(out.residual);
  out.bound_constant = bound;
  // small slack for the double evaluation of the exact residual
  out.within_bound = out.residual_norm <= bound * ed * ed * (1 + 1e-9) + 1e-300;
  out.within_tolerance = out.residual_norm <= req.tolerance;
  return out;
}

SubordinateWitnessReport check_subordinate_witness(const MatrixTuple& t, const TupleProblem& problem) {
  SubordinateWitnessReport rep;
  t.validate();
  if (t.mode != problem.mode || t.n() != problem.n || t.matrices.size() != problem.classes.size()) {
    rep.reason = "witness shape does not match the problem";
    return rep;
  }
  rep.relation = verify_relation(t);
  const std::size_t n = static_cast<std::size_t>(problem.n);
  bool all = true, any_strict = false;
  for (std::size_t j = 0; j < problem.classes.size(); ++j) {
    const ClassSpec& c = problem.classes[j];
    bool sub = true, strict = false;
    const JnfShape shape = c.shape();
    for (std::size_t l = 0; l < c.slots.size() && sub; ++l) {
      const RankSequence upper = rank_sequence(shape, l);
      const Matrix shifted = t.matrices[j] - Matrix::scalar(n, gaussian_value(c.slots[l].value));
      Matrix pw = Matrix::identity(n);
      for (std::size_t k = 1; k <= n; ++k) {
        pw = pw * shifted;
        const int rk = static_cast<int>(rank(pw));
        const int up = upper.at(static_cast<int>(k));
        // same multiplicity: the stable rank must agree
        if (rk > up || (k == n && rk != upper.stable)) {
          sub = false;
          break;
        }
        strict = strict || rk < up;
      }
    }
    rep.subordinate.push_back(sub);
    rep.strict.push_back(sub && strict);
    all = all && sub;
    any_strict = any_strict || (sub && strict);
  }
  rep.applicable = rep.relation && all && any_strict;
  if (!rep.relation) rep.reason = "witness does not satisfy the defining relation";
  else if (!all) rep.reason = "some matrix is not in a class subordinate to its target class";
  else if (!any_strict) rep.reason = "witness lies in the target classes themselves";
  return rep;
}

} // namespace dsp
