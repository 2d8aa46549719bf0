#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "kronreal/cmatrix.hpp"
#include "kronreal/factorization.hpp"
#include "kronreal/marginals.hpp"
#include "kronreal/realization.hpp"

// Interchange formats. Every parse failure throws kronreal::Error with
// ErrorKind::Parse (or the validating constructor's own kind).
//
//   matrix       {"rows": r, "cols": c, "data": [[re, im], ...]}   row-major
//   realization  {"n", "m_in", "m_out", "A", "B", "C", "D"}
//   dims         {"n_l", "m_l", "n_r", "m_r"}
//   marginal     {"N1", "N2", "side": "A" | "B"}
//   problem      {"R_F", "R_Finv", "dims", "u", "v", optional "T"}
//   result       {"F_l", "F_r", "residual_report": {"samples", "residuals", "max_residual"}}
namespace kronreal::json {

using Json = nlohmann::json;

Json to_json(Complex z);
Json to_json(const CMatrix& m);
Json to_json(const Realization& r);
Json to_json(const FactorDims& d);
Json to_json(const MarginalSpec& s);
Json to_json(const FactorizationProblem& p);
Json to_json(const FactorizationResult& r);

Complex complex_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
Realization realization_from_json(const Json& j);
FactorDims dims_from_json(const Json& j);
MarginalSpec marginal_spec_from_json(const Json& j);
FactorizationProblem problem_from_json(const Json& j);

/// Canonical text: sorted keys, two-space indent, shortest round-trip doubles,
/// trailing newline.
std::string dump(const Json& j);
/// Same content on one line (for newline-delimited report streams).
std::string dump_line(const Json& j);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace kronreal::json
