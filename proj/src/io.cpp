#include "dsp/io.hpp"

#include <fstream>
#include <sstream>

namespace dsp {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  fail(path, "expected a rational \"p/q\"");
}

int int_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > 1'000'000) fail(path, "integer out of range");
  return static_cast<int>(v);
}

Mode mode_at(const Json& doc) {
  const Json& m = member(doc, "mode", "");
  if (m == "additive") return Mode::additive;
  if (m == "multiplicative") return Mode::multiplicative;
  fail("/mode", "expected \"additive\" or \"multiplicative\"");
}

GaussianRational gaussian_at(const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return GaussianRational(rational_at(j, path));
  if (!j.is_object()) fail(path, "expected {\"re\", \"im\"} or a rational string");
  GaussianRational z;
  z.re = rational_at(member(j, "re", path), path + "/re");
  if (j.contains("im")) z.im = rational_at(j["im"], path + "/im");
  return z;
}

Eigenvalue value_at(const Json& j, Mode mode, const std::string& path) {
  if (mode == Mode::additive) return gaussian_at(j, path);
  if (!j.is_object()) fail(path, "expected {\"angle\", \"magnitude\"}");
  const Rational angle = rational_at(member(j, "angle", path), path + "/angle");
  Rational magnitude = 1;
  if (j.contains("magnitude")) magnitude = rational_at(j["magnitude"], path + "/magnitude");
  if (sgn(magnitude) <= 0) fail(path + "/magnitude", "magnitude must be positive");
  return PolarValue(angle, magnitude);
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

} // namespace

TupleProblem parse_problem(const Json& doc) {
  TupleProblem p;
  p.mode = mode_at(doc);
  p.n = int_at(member(doc, "n", ""), "/n");
  if (p.n < 1) fail("/n", "n must be positive");
  const Json& classes = member(doc, "classes", "");
  if (!classes.is_array() || classes.empty()) fail("/classes", "expected a nonempty array");
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const std::string cpath = "/classes/" + std::to_string(j);
    const Json& eigs = member(classes[j], "eigenvalues", cpath);
    if (!eigs.is_array() || eigs.empty()) fail(cpath + "/eigenvalues", "expected a nonempty array");
    ClassSpec c;
    for (std::size_t k = 0; k < eigs.size(); ++k) {
      const std::string epath = cpath + "/eigenvalues/" + std::to_string(k);
      const Eigenvalue value = value_at(member(eigs[k], "value", epath), p.mode, epath + "/value");
      const int mult = int_at(member(eigs[k], "multiplicity", epath), epath + "/multiplicity");
      if (mult < 1) fail(epath + "/multiplicity", "multiplicity must be positive");
      std::vector<int> blocks;
      if (eigs[k].contains("blocks")) {
        const Json& b = eigs[k]["blocks"];
        if (!b.is_array() || b.empty()) fail(epath + "/blocks", "expected a nonempty array of block sizes");
        for (std::size_t i = 0; i < b.size(); ++i) {
          const int s = int_at(b[i], epath + "/blocks/" + std::to_string(i));
          if (s < 1) fail(epath + "/blocks/" + std::to_string(i), "block sizes must be positive");
          blocks.push_back(s);
        }
      } else {
        blocks.assign(static_cast<std::size_t>(mult), 1);
      }
      Partition part(blocks);
      if (part.size() != mult)
        fail(epath, "blocks sum to " + std::to_string(part.size()) + " but multiplicity is " + std::to_string(mult));
      c.slots.push_back({value, std::move(part)});
    }
    p.classes.push_back(std::move(c));
  }
  p.validate();
  return p;
}

TupleProblem parse_problem_text(std::string_view text) { return parse_problem(parse_text(text)); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const Eigenvalue& e) {
  if (const auto* z = std::get_if<GaussianRational>(&e)) return to_json(*z);
  const auto& v = std::get<PolarValue>(e);
  return Json{{"angle", to_string(v.angle())}, {"magnitude", to_string(v.magnitude())}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const JnfShape& s) {
  Json out = Json::array();
  for (const auto& b : s.blocks()) out.push_back(to_json(b));
  return out;
}

Json problem_to_json(const TupleProblem& p) {
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json eigs = Json::array();
    for (const auto& s : c.slots)
      eigs.push_back(Json{{"value", to_json(s.value)}, {"multiplicity", s.multiplicity()}, {"blocks", to_json(s.blocks)}});
    classes.push_back(Json{{"eigenvalues", std::move(eigs)}});
  }
  return Json{{"mode", to_string(p.mode)}, {"n", p.n}, {"classes", std::move(classes)}};
}

MatrixTuple parse_witness(const Json& doc) {
  MatrixTuple t;
  t.mode = mode_at(doc);
  const int n = int_at(member(doc, "n", ""), "/n");
  if (n < 1) fail("/n", "n must be positive");
  const Json& mats = member(doc, "matrices", "");
  if (!mats.is_array() || mats.empty()) fail("/matrices", "expected a nonempty array");
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t j = 0; j < mats.size(); ++j) {
    const std::string mpath = "/matrices/" + std::to_string(j);
    if (!mats[j].is_array() || mats[j].size() != un) fail(mpath, "expected " + std::to_string(n) + " rows");
    Matrix m(un, un);
    for (std::size_t r = 0; r < un; ++r) {
      const Json& row = mats[j][r];
      const std::string rpath = mpath + "/" + std::to_string(r);
      if (!row.is_array() || row.size() != un) fail(rpath, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < un; ++c) m(r, c) = gaussian_at(row[c], rpath + "/" + std::to_string(c));
    }
    t.matrices.push_back(std::move(m));
  }
  t.validate();
  return t;
}

MatrixTuple parse_witness_text(std::string_view text) { return parse_witness(parse_text(text)); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_to_json(const MatrixTuple& t) {
  Json mats = Json::array();
  for (const auto& m : t.matrices) mats.push_back(to_json(m));
  return Json{{"mode", to_string(t.mode)}, {"n", t.n()}, {"matrices", std::move(mats)}};
}

Json to_json(const RigidityReport& r) {
  return Json{{"n", r.n},           {"kappa", r.kappa},   {"d", r.d},         {"r", r.r},
              {"sum_d", r.sum_d},   {"sum_r", r.sum_r},   {"alpha", r.alpha}, {"beta", r.beta},
              {"omega", r.omega},   {"beta_failures", r.beta_failures}};
}

Json to_json(const PsiTrace& t) {
  Json levels = Json::array();
  for (const auto& l : t.levels) {
    Json shapes = Json::array();
    for (const auto& s : l.shapes) shapes.push_back(to_json(s));
    Json level{{"n", l.n}, {"kappa", l.kappa}, {"shapes", std::move(shapes)}};
    if (!l.chosen_labels.empty()) level["chosen_labels"] = l.chosen_labels;
    if (l.n1) level["n1"] = *l.n1;
    levels.push_back(std::move(level));
  }
  return Json{{"status", to_string(t.status)}, {"levels", std::move(levels)}};
}

Json to_json(const NonGenericityRelation& r) { return Json{{"m", r.m}, {"counts", r.counts}}; }

namespace {

Json classes_json(const std::vector<ClassSpec>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) {
    Json eigs = Json::array();
    for (const auto& s : c.slots) eigs.push_back(Json{{"value", to_json(s.value)}, {"blocks", to_json(s.blocks)}});
    out.push_back(std::move(eigs));
  }
  return out;
}

} // namespace

Json to_json(const SpecialCertificate& c) {
  return Json{{"l", c.l},
              {"n1", c.n1},
              {"diagonal", c.diagonal},
              {"inner_kappa", c.inner_kappa},
              {"inner_tuple_good", c.inner_tuple_good},
              {"inner_eigenvalue_product_identity", c.inner_eigenvalue_product_identity},
              {"inner", classes_json(c.inner)},
              {"subordinate", classes_json(c.subordinate)}};
}

Json to_json(const Verdict& v) {
  Json just = Json::array();
  for (const auto& r : v.justification) {
    Json step{{"rule", r.rule}, {"description", r.description}};
    if (!r.detail.empty()) step["detail"] = r.detail;
    just.push_back(std::move(step));
  }
  Json out{{"dsp", to_string(v.dsp)}, {"weak_dsp", to_string(v.weak_dsp)}, {"justification", std::move(just)},
           {"rigidity", to_json(v.rigidity)}};
  out["expected_dimension"] = v.expected_dimension ? Json(*v.expected_dimension) : Json(nullptr);
  out["good"] = v.good.good;
  out["psi_status"] = to_string(v.good.trace.status);
  out["generic"] = v.generic ? Json(*v.generic) : Json(nullptr);
  if (v.relation) out["relation"] = to_json(*v.relation);
  if (!v.certificates.empty()) {
    Json certs = Json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    out["certificates"] = std::move(certs);
  }
  if (v.subordinate_witness) {
    const auto& w = *v.subordinate_witness;
    out["subordinate_witness"] = Json{{"relation", w.relation}, {"subordinate", w.subordinate},
                                      {"strict", w.strict},     {"applicable", w.applicable},
                                      {"reason", w.reason}};
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace dsp
