#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "commands.hpp"
#include "kronreal/error.hpp"
#include "kronreal/json_io.hpp"

namespace {

using kronreal::cli::Json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << kronreal::json::dump(j);
    } else {
        kronreal::json::write_file(out, j);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kronreal: tensor products and factorizations of state-space realizations"};
    app.require_subcommand(1);

    std::string out;
    std::string z_text;
    std::string z2_text;
    std::optional<double> tol;
    std::uint64_t seed = 0;

    // gen
    std::size_t n = 0, m_in = 1, m_out = 1;
    bool d_identity = false;
    auto* gen = app.add_subcommand("gen", "Generate a seeded random realization");
    gen->add_option("--seed", seed, "PRNG seed")->required();
    gen->add_option("--n", n, "state dimension")->required();
    gen->add_option("--m-in", m_in, "input dimension")->required();
    gen->add_option("--m-out", m_out, "output dimension")->required();
    gen->add_flag("--d-identity", d_identity, "force D = I");
    gen->add_option("--out", out, "output file (stdout if omitted)");

    // gen-problem
    kronreal::FactorDims dims{1, 1, 1, 1};
    double max_cond = 1e4;
    auto* gen_problem = app.add_subcommand("gen-problem", "Generate a factorization problem with known factors");
    gen_problem->add_option("--seed", seed, "PRNG seed")->required();
    gen_problem->add_option("--n-l", dims.n_l)->required();
    gen_problem->add_option("--m-l", dims.m_l)->required();
    gen_problem->add_option("--n-r", dims.n_r)->required();
    gen_problem->add_option("--m-r", dims.m_r)->required();
    gen_problem->add_option("--max-cond", max_cond, "bound on cond_1(T)");
    gen_problem->add_option("--out", out);

    // eval
    std::vector<std::string> eval_files;
    std::string eval_op = "tensor";
    auto* eval = app.add_subcommand("eval", "Evaluate a realization at z, or a pair at (z, z2)");
    eval->add_option("files", eval_files, "one realization, or two for two-variable evaluation")
        ->required()
        ->expected(1, 2);
    eval->add_option("--z", z_text, "evaluation point re,im")->required();
    eval->add_option("--z2", z2_text, "second variable for a pair (defaults to --z)");
    eval->add_option("--op", eval_op, "pair operation")->check(CLI::IsMember({"product", "tensor"}));
    eval->add_option("--out", out);

    // product
    std::string left, right;
    auto* product = app.add_subcommand("product", "Series product realization");
    product->add_option("left", left)->required();
    product->add_option("right", right)->required();
    product->add_option("--out", out);

    // tensor
    std::vector<std::string> tensor_files;
    auto* tensor = app.add_subcommand("tensor", "Tensor-product realization of two or more factors");
    tensor->add_option("files", tensor_files)->required()->expected(1, -1);
    tensor->add_option("--out", out);

    // inverse
    std::vector<std::string> inverse_files;
    auto* inverse = app.add_subcommand("inverse", "Inverse realization; with two files, the tensor inverse");
    inverse->add_option("files", inverse_files)->required()->expected(1, 2);
    inverse->add_option("--out", out);

    // marginal
    std::string marginal_file, side = "A";
    std::size_t n1 = 0, n2 = 0;
    auto* marginal = app.add_subcommand("marginal", "Marginal realization, or its value at --z");
    marginal->add_option("file", marginal_file)->required();
    marginal->add_option("--n1", n1)->required();
    marginal->add_option("--n2", n2)->required();
    marginal->add_option("--side", side)->check(CLI::IsMember({"A", "B"}));
    marginal->add_option("--z", z_text, "evaluate at re,im instead of returning a realization");
    marginal->add_option("--out", out);

    // factorize
    std::string problem_file, mode = "given_T";
    auto* factorize = app.add_subcommand("factorize", "Recover tensor factors; report goes to stdout");
    factorize->add_option("problem", problem_file)->required();
    factorize->add_option("--mode", mode)->check(CLI::IsMember({"given_T", "search"}));
    factorize->add_option("--out", out, "factor file")->required();
    factorize->add_option("--tol", tol, "reconstruction tolerance (default 1e-7)");

    // verify
    std::string suite, seeds_text;
    bool timing = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* verify = app.add_subcommand("verify", "Run a property suite over a seed range");
    verify->add_option("--suite", suite)->required();
    auto* seeds_opt = verify->add_option("--seeds", seeds_text, "inclusive range a..b");
    verify->add_option("--seed", seed, "single seed")->excludes(seeds_opt);
    verify->add_option("--tol", tol, "override upper tolerances");
    verify->add_flag("--timing", timing, "include wall time in reports");
    verify->add_option("--jobs", jobs, "parallel seeds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    namespace cli = kronreal::cli;
    try {
        if (*gen) {
            emit(cli::cmd_gen(seed, n, m_in, m_out, d_identity), out);
        } else if (*gen_problem) {
            emit(cli::cmd_gen_problem(seed, dims, max_cond), out);
        } else if (*eval) {
            const kronreal::Complex z = cli::parse_complex(z_text);
            if (eval_files.size() == 1) {
                emit(cli::cmd_eval(eval_files[0], z), out);
            } else {
                const kronreal::Complex z2 = z2_text.empty() ? z : cli::parse_complex(z2_text);
                emit(cli::cmd_eval_pair(eval_files[0], eval_files[1], z, z2, eval_op), out);
            }
        } else if (*product) {
            emit(cli::cmd_product(left, right), out);
        } else if (*tensor) {
            emit(cli::cmd_tensor(tensor_files), out);
        } else if (*inverse) {
            emit(inverse_files.size() == 1 ? cli::cmd_inverse(inverse_files[0])
                                           : cli::cmd_tensor_inverse(inverse_files[0], inverse_files[1]),
                 out);
        } else if (*marginal) {
            const kronreal::MarginalSpec spec{n1, n2, side == "A" ? kronreal::MarginalSide::A
                                                                  : kronreal::MarginalSide::B};
            std::optional<kronreal::Complex> z;
            if (!z_text.empty()) z = cli::parse_complex(z_text);
            emit(cli::cmd_marginal(marginal_file, spec, z), out);
        } else if (*factorize) {
            const cli::FactorizeOutcome outcome = cli::cmd_factorize(problem_file, mode, tol.value_or(1e-7));
            kronreal::json::write_file(out, outcome.result);
            std::cout << kronreal::json::dump_line(outcome.report) << '\n';
            return outcome.pass ? 0 : kExitCheckFailed;
        } else if (*verify) {
            const cli::SeedRange range =
                verify->count("--seed") > 0 ? cli::SeedRange{seed, seed, false} : cli::parse_seed_range(seeds_text);
            return cli::cmd_verify(suite, range, tol, timing, jobs, std::cout);
        }
    } catch (const kronreal::Error& e) {
        std::cerr << kronreal::json::dump_line(
                         cli::error_json(std::string(kronreal::to_string(e.kind())), e.what(), e.residual()))
                  << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << kronreal::json::dump_line(cli::error_json("internal", e.what())) << '\n';
        return kExitError;
    }
    return 0;
}
