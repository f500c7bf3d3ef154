#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dsp/criteria.hpp"
#include "dsp/eigenvalues.hpp"
#include "dsp/problem.hpp"
#include "dsp/solver.hpp"
#include "dsp/special.hpp"
#include "dsp/witness.hpp"

namespace dsp {

using Json = nlohmann::ordered_json;

/// Problem document:
///   {"mode": "additive"|"multiplicative", "n": int,
///    "classes": [{"eigenvalues": [{"value": V, "multiplicity": int, "blocks": [int...]}]}]}
/// V is {"re": "p/q", "im": "p/q"} (or a bare "p/q") in additive mode and
/// {"angle": "p/q", "magnitude": "p/q"} in multiplicative mode. Errors carry a JSON-pointer path.
TupleProblem parse_problem(const Json& doc);
TupleProblem parse_problem_text(std::string_view text);
Json problem_to_json(const TupleProblem& p);

/// Witness document: {"mode": ..., "n": int, "matrices": [[[entry...]...]...]},
/// entries {"re": "p/q", "im": "p/q"} or a bare "p/q".
MatrixTuple parse_witness(const Json& doc);
MatrixTuple parse_witness_text(std::string_view text);
Json witness_to_json(const MatrixTuple& t);

Json to_json(const GaussianRational& z);
Json to_json(const Eigenvalue& e);
Json to_json(const Partition& p);
Json to_json(const JnfShape& s);
Json to_json(const Matrix& m);
Json to_json(const RigidityReport& r);
Json to_json(const PsiTrace& t);
Json to_json(const NonGenericityRelation& r);
Json to_json(const SpecialCertificate& c);
Json to_json(const Verdict& v);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace dsp
