#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <ostream>
#include <stdexcept>

#include "kronreal/error.hpp"
#include "kronreal/instances.hpp"
#include "kronreal/json_io.hpp"
#include "kronreal/random.hpp"
#include "kronreal/realization.hpp"
#include "kronreal/tensor.hpp"
#include "kronreal/tolerances.hpp"
#include "suites.hpp"

namespace kronreal::cli {

namespace io = kronreal::json;

namespace {

[[noreturn]] void bad_argument(const std::string& what) { throw Error(ErrorKind::Parse, what); }

double parse_double(std::string_view s, const std::string& whole) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad_argument("cannot parse number in '" + whole + "'");
    return v;
}

std::uint64_t parse_u64(std::string_view s, const std::string& whole) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad_argument("cannot parse seed in '" + whole + "'");
    return v;
}

Realization load(const std::string& path) { return io::realization_from_json(io::read_file(path)); }

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::string_view s(text);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) return {parse_double(s, text), 0.0};
    return {parse_double(s.substr(0, comma), text), parse_double(s.substr(comma + 1), text)};
}

SeedRange parse_seed_range(const std::string& text) {
    const std::string_view s(text);
    if (s.empty()) return {0, 0, true};
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const std::uint64_t v = parse_u64(s, text);
        return {v, v, false};
    }
    const std::uint64_t a = parse_u64(s.substr(0, dots), text);
    const std::uint64_t b = parse_u64(s.substr(dots + 2), text);
    return {a, b, b < a};
}

Json cmd_gen(std::uint64_t seed, std::size_t n, std::size_t m_in, std::size_t m_out, bool d_identity) {
    if (m_in == 0 || m_out == 0) throw Error(ErrorKind::DimensionMismatch, "gen: m_in and m_out must be positive");
    SplitMix64 rng(seed);
    return io::to_json(random_realization(rng, n, m_in, m_out, d_identity));
}

Json cmd_gen_problem(std::uint64_t seed, const FactorDims& dims, double max_condition) {
    if (dims.m_l == 0 || dims.m_r == 0) {
        throw Error(ErrorKind::DimensionMismatch, "gen-problem: m_l and m_r must be positive");
    }
    SplitMix64 rng(seed);
    const FactorizationInstance inst = make_factorization_instance(rng, dims, max_condition);
    Json j = io::to_json(inst.problem);
    j["F_l"] = io::to_json(inst.left);
    j["F_r"] = io::to_json(inst.right);
    return j;
}

Json cmd_eval(const std::string& path, Complex z) { return io::to_json(evaluate(load(path), z)); }

Json cmd_eval_pair(const std::string& left, const std::string& right, Complex z_left, Complex z_right,
                   const std::string& op) {
    const Realization l = load(left), r = load(right);
    if (op == "product") return io::to_json(evaluate_two_var(l, r, z_left, z_right));
    if (op == "tensor") return io::to_json(evaluate_tensor_two_var(l, r, z_left, z_right));
    bad_argument("eval: --op must be product or tensor");
}

Json cmd_product(const std::string& left, const std::string& right) {
    return io::to_json(series_product(load(left), load(right)));
}

Json cmd_tensor(const std::vector<std::string>& paths) {
    std::vector<Realization> factors;
    factors.reserve(paths.size());
    for (const auto& p : paths) factors.push_back(load(p));
    return io::to_json(multi_tensor(factors));
}

Json cmd_inverse(const std::string& path) { return io::to_json(inverse_realization(load(path))); }

Json cmd_tensor_inverse(const std::string& left, const std::string& right) {
    return io::to_json(tensor_inverse_realization(load(left), load(right)));
}

Json cmd_marginal(const std::string& path, const MarginalSpec& spec, std::optional<Complex> z) {
    const Realization r = load(path);
    if (z) return io::to_json(marginal_eval(r, spec, *z));
    return io::to_json(marginal_realization(r, spec));
}

FactorizeOutcome cmd_factorize(const std::string& problem_path, const std::string& mode, double tol) {
    const FactorizationProblem problem = io::problem_from_json(io::read_file(problem_path));
    Json checks = Json::array();
    bool pass = true;
    const auto add = [&](const char* name, double residual, double bound) {
        const bool ok = residual <= bound;
        pass = pass && ok;
        checks.push_back({{"name", name}, {"residual", residual}, {"tol", bound}, {"pass", ok}});
    };

    FactorizationResult result = [&] {
        if (mode == "given_T") {
            if (!problem.transform) {
                throw Error(ErrorKind::PreconditionViolation, "factorize: given_T mode needs T in the problem file");
            }
            return tensor_factorize(problem);
        }
        if (mode == "search") {
            const ProjectionSearchResult found = search_supporting_projections(
                problem.f.A(), problem.f_inverse.A(), problem.dims.alpha(), problem.dims.beta());
            add("subspace_condition",
                subspace_condition_residual(problem.f.A(), problem.f_inverse.A(), found.projections).max(),
                tol::kProjectionAccept);
            return tensor_factorize(problem, found.projections,
                                    hat_projections(found.transform, problem.u, problem.v, problem.dims));
        }
        bad_argument("factorize: --mode must be given_T or search");
    }();
    add("reconstruction", result.max_residual(), tol);

    Json report = {{"operation", "factorize"},
                   {"mode", mode},
                   {"dims", io::to_json(problem.dims)},
                   {"checks", std::move(checks)},
                   {"pass", pass}};
    return {io::to_json(result), std::move(report), pass};
}

int cmd_verify(const std::string& suite, const SeedRange& seeds, std::optional<double> tol, bool timing,
               unsigned jobs, std::ostream& out) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        bad_argument("verify: unknown suite '" + suite + "'");
    }
    if (seeds.empty) return 0;
    jobs = std::max(1u, jobs);

    bool all_pass = true;
    std::uint64_t next = seeds.first;
    bool done = false;
    while (!done) {
        std::vector<std::future<SuiteReport>> batch;
        for (unsigned k = 0; k < jobs && !done; ++k) {
            const std::uint64_t seed = next;
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       [&suite, seed, tol] { return run_suite(suite, seed, tol); }));
            if (seed == seeds.last) done = true;
            else ++next;
        }
        for (auto& f : batch) {
            SuiteReport rep = f.get();
            if (!timing) rep.wall_time.reset();
            all_pass = all_pass && rep.pass();
            out << io::dump_line(rep.to_json()) << '\n';
        }
    }
    out.flush();
    return all_pass ? 0 : 1;
}

Json error_json(const std::string& kind, const std::string& message, std::optional<double> residual) {
    Json body = {{"kind", kind}, {"message", message}};
    if (residual) body["residual"] = *residual;
    return {{"error", std::move(body)}};
}

}  // namespace kronreal::cli
