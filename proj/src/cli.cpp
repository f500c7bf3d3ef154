#include "dsp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>

#include "dsp/io.hpp"

namespace dsp {

namespace {

struct Flags {
  std::string problem;
  std::string witness;
  std::string directions;
  std::string epsilon;
  std::string output;
  std::string mode;
  bool exhaustive_ties = false;
  bool human = false;
  bool generate = false;
  std::uint64_t relation_cap = RelationSearchOptions{}.cap;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
};

struct Report {
  Json body;
  int status = exit_ok;
};

SolverOptions solver_options(const Flags& f) {
  SolverOptions o;
  o.good.exhaustive_ties = f.exhaustive_ties;
  o.relations.cap = f.relation_cap;
  return o;
}

TupleProblem load_problem(const Flags& f) { return parse_problem_text(read_file(f.problem)); }

MatrixTuple load_witness(const Flags& f) {
  if (f.witness.empty()) throw InputError("this command requires --witness");
  return parse_witness_text(read_file(f.witness));
}

Rational parse_epsilon(const std::string& text) {
  if (text.empty()) throw InputError("--epsilon is required");
  if (text.find_first_of(".eE") == std::string::npos) return parse_rational(text);
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("cannot parse epsilon \"" + text + "\"");
  }
  if (used != text.size()) throw InputError("cannot parse epsilon \"" + text + "\"");
  return exact_from_double(x);
}

Report cmd_classify(const Flags& f) {
  const TupleProblem p = load_problem(f);
  std::optional<MatrixTuple> w;
  if (!f.witness.empty()) w = load_witness(f);
  const Verdict v = classify(p, solver_options(f), w ? &*w : nullptr);
  return {to_json(v), exit_ok};
}

Report cmd_good(const Flags& f) {
  const TupleProblem p = load_problem(f);
  const auto shapes = p.shapes();
  const GoodResult g = is_good(shapes, solver_options(f).good);
  Json body{{"good", g.good}, {"rigidity", to_json(rigidity_report(shapes))}, {"trace", to_json(g.trace)}};
  if (f.exhaustive_ties) body["branches_explored"] = g.branches_explored;
  return {body, g.good ? exit_ok : exit_negative};
}

Report cmd_generic(const Flags& f) {
  const TupleProblem p = load_problem(f);
  const auto opts = solver_options(f).relations;
  if (f.generate) {
    Mode mode = p.mode;
    if (f.mode == "additive") mode = Mode::additive;
    else if (f.mode == "multiplicative") mode = Mode::multiplicative;
    else if (!f.mode.empty()) throw InputError("--mode must be additive or multiplicative");
    try {
      return {problem_to_json(generate_generic(p.shapes(), mode, f.seed, opts)), exit_ok};
    } catch (const NoGenericAssignment& e) {
      return {Json{{"generic", false}, {"reason", e.what()}}, exit_negative};
    }
  }
  try {
    const GenericityResult g = is_generic(p, opts);
    Json body{{"generic", g.generic}};
    if (g.witness) body["relation"] = to_json(*g.witness);
    return {body, g.generic ? exit_ok : exit_negative};
  } catch (const SearchLimitExceeded& e) {
    return {Json{{"generic", nullptr}, {"reason", e.what()}}, exit_negative};
  }
}

Report cmd_special(const Flags& f) {
  const TupleProblem p = load_problem(f);
  const auto o = solver_options(f);
  const SpecialnessFlags s = classify_specialness(p, SpecialOptions{o.good, o.relations});
  Json certs = Json::array();
  for (const auto& c : s.certificates) certs.push_back(to_json(c));
  Json body{{"special", s.special},
            {"special_diagonal", s.special_diagonal},
            {"quasi_generic", s.quasi_generic},
            {"certificates", std::move(certs)}};
  return {body, s.special ? exit_ok : exit_negative};
}

Report cmd_psi_trace(const Flags& f) {
  const TupleProblem p = load_problem(f);
  const GoodResult g = is_good(p.shapes(), solver_options(f).good);
  Json body = to_json(g.trace);
  body["good"] = g.good;
  if (f.exhaustive_ties) body["branches_explored"] = g.branches_explored;
  return {body, exit_ok};
}

Report cmd_verify(const Flags& f) {
  const TupleProblem p = load_problem(f);
  const MatrixTuple t = load_witness(f);
  if (t.mode != p.mode) throw InputError("witness mode differs from problem mode");
  if (t.n() != p.n) throw InputError("witness size differs from problem size");
  if (t.matrices.size() != p.classes.size()) throw InputError("witness has a different number of matrices");

  const bool relation = verify_relation(t);
  Json membership = Json::array();
  bool all_members = true;
  for (std::size_t j = 0; j < p.classes.size(); ++j) {
    const auto m = check_membership(t.matrices[j], p.classes[j]);
    all_members = all_members && m.member;
    Json entry{{"class", j}, {"member", m.member}};
    if (!m.member) entry["reason"] = m.reason;
    membership.push_back(std::move(entry));
  }
  const auto centralizer = centralizer_dimension(t);
  const auto irreducible = is_irreducible(t.matrices);
  const std::span<const Matrix> first_p(t.matrices.data(), t.matrices.size() - 1);
  const bool surjective = t.matrices.size() > 1 ? check_surjectivity(first_p) : p.n == 1;
  const long kappa = rigidity_report(p.shapes()).kappa;
  const long chi = euler_characteristic(t);

  Json body{{"relation", relation},
            {"membership", std::move(membership)},
            {"centralizer_dimension", centralizer},
            {"trivial_centralizer", centralizer == 1},
            {"irreducible", irreducible.irreducible},
            {"algebra_dimension", irreducible.algebra_dimension},
            {"surjectivity", surjective},
            {"euler_characteristic", chi},
            {"kappa", kappa},
            {"euler_matches_kappa", chi == kappa}};
  bool pass = relation && all_members && chi == kappa;
  if (relation && all_members) {
    const long local = local_dimension(t, p.classes);
    body["local_dimension"] = local;
    body["expected_dimension"] = expected_dimension(p);
  }
  body["all_pass"] = pass;
  return {body, pass ? exit_ok : exit_negative};
}

Report cmd_dim(const Flags& f) {
  const TupleProblem p = load_problem(f);
  Json body{{"expected_dimension", expected_dimension(p)}, {"kappa", rigidity_report(p.shapes()).kappa}};
  if (!f.witness.empty()) {
    const MatrixTuple t = load_witness(f);
    try {
      body["local_dimension"] = local_dimension(t, p.classes);
      body["centralizer_dimension"] = centralizer_dimension(t);
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
  }
  return {body, exit_ok};
}

Report cmd_deform(const Flags& f) {
  DeformationRequest req;
  req.base = load_witness(f);
  if (f.directions.empty()) throw InputError("deform requires --directions");
  const MatrixTuple dirs = parse_witness_text(read_file(f.directions));
  if (dirs.n() != req.base.n() || dirs.matrices.size() != req.base.matrices.size())
    throw InputError("directions do not match the base tuple");
  req.directions = dirs.matrices;
  req.epsilon = parse_epsilon(f.epsilon);
  req.tolerance = f.tolerance;
  DeformationResult r;
  try {
    r = deform_step(req);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  Json corr = Json::array();
  for (const auto& x : r.correction) corr.push_back(to_json(x));
  Json body{{"epsilon", to_string(req.epsilon)},
            {"residual_norm", r.residual_norm},
            {"bound_constant", r.bound_constant},
            {"within_bound", r.within_bound},
            {"within_tolerance", r.within_tolerance},
            {"tolerance", f.tolerance},
            {"correction", std::move(corr)},
            {"residual", to_json(r.residual)},
            {"deformed", witness_to_json(r.deformed)}};
  if (!f.output.empty()) {
    std::ofstream o(f.output);
    if (!o) throw InputError("cannot write " + f.output);
    o << witness_to_json(r.deformed).dump(2) << '\n';
  }
  return {body, r.within_tolerance ? exit_ok : exit_negative};
}

void render_human(const std::string& command, const Json& body, std::ostream& out) {
  if (command == "classify") {
    out << "DSP: " << body["dsp"].get<std::string>() << "\n";
    out << "weak DSP: " << body["weak_dsp"].get<std::string>() << "\n";
    out << "kappa: " << body["rigidity"]["kappa"] << "\n";
    if (!body["expected_dimension"].is_null()) out << "expected dimension: " << body["expected_dimension"] << "\n";
    int k = 1;
    for (const auto& r : body["justification"]) {
      out << k++ << ". " << r["rule"].get<std::string>() << ": " << r["description"].get<std::string>();
      if (r.contains("detail")) out << " (" << r["detail"].get<std::string>() << ")";
      out << "\n";
    }
    return;
  }
  if (command == "psi-trace" || command == "good") {
    const Json& trace = command == "good" ? body["trace"] : body;
    for (const auto& l : trace["levels"]) {
      out << "n=" << l["n"] << " kappa=" << l["kappa"] << " " << l["shapes"].dump();
      if (l.contains("n1")) out << " -> " << l["n1"];
      out << "\n";
    }
    out << "status: " << trace["status"].get<std::string>() << "\n";
    if (body.contains("good")) out << "good: " << (body["good"].get<bool>() ? "yes" : "no") << "\n";
    return;
  }
  for (const auto& [key, value] : body.items()) {
    out << key << ": ";
    if (value.is_string()) out << value.get<std::string>();
    else out << value.dump();
    out << "\n";
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deligne-Simpson problem toolkit", "dspctl"};
  app.require_subcommand(1);
  Flags f;

  using Handler = std::function<Report(const Flags&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler h, bool needs_problem) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_problem) sub->add_option("problem", f.problem, "problem document")->required();
    sub->add_flag("--human", f.human, "prose output");
    sub->add_option("--output", f.output, "write the report (deform: the deformed witness) to a file");
    sub->add_flag("--exhaustive-ties", f.exhaustive_ties, "explore every tie in the reduction");
    sub->add_option("--relation-cap", f.relation_cap, "bound on enumerated selections per cardinality");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  add("classify", "DSP and weak DSP verdict", cmd_classify, true)
      ->add_option("--witness", f.witness, "subordinate tuple witness");
  add("good", "goodness of the JNF tuple", cmd_good, true);
  auto* gen = add("generic", "genericity of the eigenvalues", cmd_generic, true);
  gen->add_flag("--generate", f.generate, "print a generic assignment for the problem's shapes");
  gen->add_option("--seed", f.seed, "generator seed");
  gen->add_option("--mode", f.mode, "mode of the generated assignment");
  add("special", "special certificates", cmd_special, true);
  add("psi-trace", "full reduction chain", cmd_psi_trace, true);
  add("verify", "witness checks", cmd_verify, true)->add_option("--witness", f.witness, "witness document")->required();
  add("dim", "expected and local dimension", cmd_dim, true)->add_option("--witness", f.witness, "witness document");
  auto* def = add("deform", "first-order deformation step", cmd_deform, false);
  def->add_option("--witness", f.witness, "base tuple")->required();
  def->add_option("--directions", f.directions, "direction matrices N_j")->required();
  def->add_option("--epsilon", f.epsilon, "step, \"p/q\" or decimal")->required();
  def->add_option("--tolerance", f.tolerance, "residual threshold");

  std::vector<std::string> argv_store{"dspctl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      Report r = handler(f);
      std::ostringstream rendered;
      if (f.human) render_human(sub->get_name(), r.body, rendered);
      else rendered << r.body.dump(2) << '\n';
      if (!f.output.empty() && sub->get_name() != "deform") {
        std::ofstream o(f.output);
        if (!o) throw InputError("cannot write " + f.output);
        o << rendered.str();
      }
      out << rendered.str();
      return r.status;
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return exit_input_error;
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << '\n';
      return exit_input_error;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << '\n';
      return exit_input_error;
    }
  }
  return exit_input_error;
}

} // namespace dsp
