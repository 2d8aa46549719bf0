#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kronreal/cmatrix.hpp"
#include "kronreal/factorization.hpp"
#include "kronreal/marginals.hpp"

namespace kronreal::cli {

using Json = nlohmann::json;

/// "re,im" or "re" -> complex.
Complex parse_complex(const std::string& text);

/// Inclusive seed range "a..b", or a single seed "a". b < a is empty.
struct SeedRange {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    bool empty = false;
};
SeedRange parse_seed_range(const std::string& text);

Json cmd_gen(std::uint64_t seed, std::size_t n, std::size_t m_in, std::size_t m_out, bool d_identity);
Json cmd_gen_problem(std::uint64_t seed, const FactorDims& dims, double max_condition);

Json cmd_eval(const std::string& path, Complex z);
/// Two-variable evaluation of a pair: "product" gives F_l(z_l) F_r(z_r), "tensor" gives F_l(z_l) (x) F_r(z_r).
Json cmd_eval_pair(const std::string& left, const std::string& right, Complex z_left, Complex z_right,
                   const std::string& op);
Json cmd_product(const std::string& left, const std::string& right);
Json cmd_tensor(const std::vector<std::string>& paths);
Json cmd_inverse(const std::string& path);
Json cmd_tensor_inverse(const std::string& left, const std::string& right);
Json cmd_marginal(const std::string& path, const MarginalSpec& spec, std::optional<Complex> z);

struct FactorizeOutcome {
    Json result;
    Json report;
    bool pass = false;
};
FactorizeOutcome cmd_factorize(const std::string& problem_path, const std::string& mode, double tol);

/// Streams one report line per seed in seed order; returns the exit code.
int cmd_verify(const std::string& suite, const SeedRange& seeds, std::optional<double> tol, bool timing,
               unsigned jobs, std::ostream& out);

/// {"error": {"kind": ..., "message": ...}} plus the residual when one was attached.
Json error_json(const std::string& kind, const std::string& message, std::optional<double> residual = std::nullopt);

}  // namespace kronreal::cli
