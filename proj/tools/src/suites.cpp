#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "kronreal/error.hpp"
#include "kronreal/factorization.hpp"
#include "kronreal/instances.hpp"
#include "kronreal/marginals.hpp"
#include "kronreal/random.hpp"
#include "kronreal/realization.hpp"
#include "kronreal/sampling.hpp"
#include "kronreal/tensor.hpp"
#include "kronreal/tolerances.hpp"

namespace kronreal::cli {

using nlohmann::json;

namespace {

std::size_t draw(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

// Square feedthroughs are shifted by 3I so inverses exist comfortably.
Realization draw_system(SplitMix64& rng, std::size_t n, std::size_t m_in, std::size_t m_out) {
    Realization r = random_realization(rng, n, m_in, m_out, false);
    if (m_in != m_out) return r;
    return Realization(r.A(), r.B(), r.C(), r.D() + 3.0 * CMatrix::identity(m_in));
}

double realization_diff(const Realization& x, const Realization& y) {
    const auto diff = [](const CMatrix& a, const CMatrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
        return max_abs_diff(a, b);
    };
    return std::max({diff(x.A(), y.A()), diff(x.B(), y.B()), diff(x.C(), y.C()), diff(x.D(), y.D())});
}

json pair_dims(const Realization& l, const Realization& r) {
    return {{"n_l", l.states()}, {"m_l", l.inputs()}, {"p_l", l.outputs()},
            {"n_r", r.states()}, {"m_r", r.inputs()}, {"p_r", r.outputs()}};
}

void proposition(SplitMix64& rng, SuiteReport& rep) {
    const Realization l = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), draw(rng, 1, 3));
    const Realization r = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), draw(rng, 1, 3));
    rep.dims = pair_dims(l, r);
    rep.checks.push_back({"construction", proposition_residual(l, r), tol::kConstruction});
    const std::size_t expected = l.states() * r.outputs() + l.inputs() * r.states();
    const std::size_t got = tensor_realization(l, r).states();
    rep.checks.push_back({"state_dim", got == expected ? 0.0 : 1.0, 0.0});
}

void tensor_eval(SplitMix64& rng, SuiteReport& rep) {
    const Realization l = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), draw(rng, 1, 3));
    const Realization r = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), draw(rng, 1, 3));
    rep.dims = pair_dims(l, r);
    const Realization t = tensor_realization(l, r);
    double worst = 0.0;
    for (const Complex z : verification_grid({&l.A(), &r.A(), &t.A()})) {
        worst = std::max(worst, relative_residual(evaluate(t, z), kron(evaluate(l, z), evaluate(r, z))));
    }
    rep.checks.push_back({"homomorphism", worst, tol::kProjection});
}

void two_var(SplitMix64& rng, SuiteReport& rep) {
    const std::size_t mid = draw(rng, 1, 3);
    const Realization l = draw_system(rng, draw(rng, 0, 3), mid, draw(rng, 1, 3));
    const Realization r = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), mid);
    rep.dims = pair_dims(l, r);
    const std::vector<Complex> zs = verification_grid({&l.A(), &r.A()});
    double product = 0.0, tensor = 0.0;
    for (std::size_t j = 0; j < zs.size(); ++j) {
        const Complex zl = zs[j], zr = zs[(j + 7) % zs.size()];
        const CMatrix fl = evaluate(l, zl), fr = evaluate(r, zr);
        product = std::max(product, relative_residual(evaluate_two_var(l, r, zl, zr), fl * fr));
        tensor = std::max(tensor, relative_residual(evaluate_tensor_two_var(l, r, zl, zr), kron(fl, fr)));
    }
    rep.checks.push_back({"product_two_var", product, tol::kProjection});
    rep.checks.push_back({"tensor_two_var", tensor, tol::kProjection});
}

void inverse(SplitMix64& rng, SuiteReport& rep) {
    const std::size_t ml = draw(rng, 1, 3), mr = draw(rng, 1, 3);
    const Realization l = draw_system(rng, draw(rng, 0, 3), ml, ml);
    const Realization r = draw_system(rng, draw(rng, 0, 3), mr, mr);
    rep.dims = pair_dims(l, r);
    const Realization li = inverse_realization(l);
    const Realization ri = inverse_realization(r);
    const Realization t = tensor_realization(l, r);
    const Realization ti = tensor_inverse_realization(l, r);
    const Realization ti_ref = inverse_realization(t);
    // The series product only composes when the inner dimensions agree.
    const std::optional<Realization> pi =
        ml == mr ? std::optional(inverse_product_realization(l, r)) : std::nullopt;
    const std::optional<Realization> pi_ref =
        ml == mr ? std::optional(inverse_realization(series_product(l, r))) : std::nullopt;

    double ident = 0.0, tensor = 0.0, product = 0.0;
    for (const Complex z : verification_grid({&l.A(), &r.A(), &li.A(), &ri.A()})) {
        ident = std::max(ident, relative_residual(evaluate(li, z) * evaluate(l, z), CMatrix::identity(ml)));
        ident = std::max(ident, relative_residual(evaluate(ri, z) * evaluate(r, z), CMatrix::identity(mr)));
        tensor = std::max(tensor, relative_residual(evaluate(ti, z), evaluate(ti_ref, z)));
        if (pi) product = std::max(product, relative_residual(evaluate(*pi, z), evaluate(*pi_ref, z)));
    }
    rep.checks.push_back({"inverse_identity", ident, tol::kProjectionAccept});
    rep.checks.push_back({"tensor_inverse", tensor, tol::kProjection});
    rep.checks.push_back({"inverse_product", product, tol::kProjection});
    rep.checks.push_back({"factored_array", factored_array_residual(l, r, false), tol::kConstruction});
    rep.checks.push_back({"factored_array_inverse", factored_array_residual(l, r, true), tol::kConstruction});
}

void deflation(SplitMix64& rng, SuiteReport& rep) {
    const Realization l = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), draw(rng, 1, 3));
    const Realization r = draw_system(rng, draw(rng, 0, 3), draw(rng, 1, 3), draw(rng, 1, 3));
    const std::size_t kl = draw(rng, 1, 3), kr = draw(rng, 1, 3);
    const CMatrix u = random_unit_vector(rng, kl);
    const CMatrix v = random_unit_vector(rng, kr);
    rep.dims = pair_dims(l, r);
    rep.dims["k_l"] = kl;
    rep.dims["k_r"] = kr;
    const InflationSide left = InflationSide::left(kl), right = InflationSide::right(kr);
    rep.checks.push_back(
        {"left_identity", realization_diff(deflate_realization(inflate(l, left), left, u), l), tol::kConstruction});
    rep.checks.push_back(
        {"right_identity", realization_diff(deflate_realization(inflate(r, right), right, v), r), tol::kConstruction});
}

FactorDims roundtrip_dims(std::uint64_t seed) {
    const std::size_t c = static_cast<std::size_t>(seed % 81);
    return {1 + c / 27, 1 + (c / 9) % 3, 1 + (c / 3) % 3, 1 + c % 3};
}

void recovery_checks(const FactorizationInstance& inst, const FactorizationResult& res, SuiteReport& rep,
                     bool factors) {
    rep.checks.push_back({"reconstruction", res.max_residual(), tol::kEndToEnd});
    if (!factors) return;
    double left = 0.0, right = 0.0;
    for (const Complex z : res.sample_points) {
        left = std::max(left, relative_residual(evaluate(res.left, z), evaluate(inst.left, z)));
        right = std::max(right, relative_residual(evaluate(res.right, z), evaluate(inst.right, z)));
    }
    rep.checks.push_back({"left_recovery", left, tol::kEndToEnd});
    rep.checks.push_back({"right_recovery", right, tol::kEndToEnd});
}

void factorize_roundtrip(SplitMix64& rng, SuiteReport& rep) {
    const FactorDims dims = roundtrip_dims(rep.seed);
    rep.dims = json{{"n_l", dims.n_l}, {"m_l", dims.m_l}, {"n_r", dims.n_r}, {"m_r", dims.m_r}};
    const FactorizationInstance inst = make_factorization_instance(rng, dims);
    recovery_checks(inst, tensor_factorize(inst.problem), rep, true);
}

void projection_search(SplitMix64& rng, SuiteReport& rep) {
    const std::size_t n_l = draw(rng, 1, 4), n_r = draw(rng, 1, 4);
    const FactorDims dims{n_l, 1, n_r, 1};
    rep.dims = json{{"n_l", dims.n_l}, {"m_l", dims.m_l}, {"n_r", dims.n_r}, {"m_r", dims.m_r}};
    const FactorizationInstance inst = make_factorization_instance(rng, dims);
    const FactorizationProblem& p = inst.problem;
    const ProjectionSearchResult found =
        search_supporting_projections(p.f.A(), p.f_inverse.A(), dims.alpha(), dims.beta());
    rep.checks.push_back(
        {"subspace_condition", subspace_condition_residual(p.f.A(), p.f_inverse.A(), found.projections).max(),
         tol::kProjectionAccept});
    recovery_checks(inst, tensor_factorize_search(p), rep, false);
}

void marginals(SplitMix64& rng, SuiteReport& rep) {
    const std::size_t n1 = draw(rng, 1, 3), n2 = draw(rng, 1, 3);
    const Realization r1 = draw_system(rng, draw(rng, 0, 3), n1, n1);
    const Realization r2 = draw_system(rng, draw(rng, 0, 3), n2, n2);
    rep.dims = json{{"N1", n1}, {"N2", n2}, {"n1", r1.states()}, {"n2", r2.states()}};
    const Realization t = tensor_realization(r1, r2);
    const std::vector<Complex> zs = verification_grid({&r1.A(), &r2.A()});
    rep.checks.push_back({"trace_relation", trace_relation_residual(r1, r2, zs), tol::kProjection});
    rep.checks.push_back({"tensor_reconstruction", marginal_reconstruction_residual(t, n1, n2, zs), tol::kProjection});

    // A generic operator on a space with both factors at least 2 is not a
    // tensor product, so the reconstruction must visibly fail.
    const std::size_t g1 = draw(rng, 2, 3), g2 = draw(rng, 2, 3);
    const Realization g = draw_system(rng, draw(rng, 0, 3), g1 * g2, g1 * g2);
    rep.checks.push_back({"non_tensor_reconstruction",
                          marginal_reconstruction_residual(g, g1, g2, verification_grid({&g.A()})), 1e-2, true});
}

using SuiteFn = std::function<void(SplitMix64&, SuiteReport&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"proposition", proposition},
        {"tensor-eval", tensor_eval},
        {"two-var", two_var},
        {"inverse", inverse},
        {"deflation", deflation},
        {"factorize-roundtrip", factorize_roundtrip},
        {"projection-search", projection_search},
        {"marginals", marginals},
    };
    return suites;
}

}  // namespace

bool Check::pass() const { return lower_bound ? residual > tol : residual <= tol; }

bool SuiteReport::pass() const {
    return !error && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

json SuiteReport::to_json() const {
    json checks_json = json::array();
    for (const Check& c : checks) {
        json entry = {{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass()}};
        if (c.lower_bound) entry["bound"] = "lower";
        checks_json.push_back(std::move(entry));
    }
    json j = {{"operation", operation}, {"seed", seed}, {"dims", dims}, {"checks", std::move(checks_json)},
              {"pass", pass()}};
    if (error) j["error"] = *error;
    if (wall_time) j["wall_time_s"] = *wall_time;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::optional<double> tol_override) {
    const auto it = registry().find(suite);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
    SuiteReport rep;
    rep.operation = suite;
    rep.seed = seed;
    SplitMix64 rng(seed);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(rng, rep);
    } catch (const Error& e) {
        rep.error = to_string(e.kind());
    }
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (tol_override) {
        for (Check& c : rep.checks)
            if (!c.lower_bound) c.tol = *tol_override;
    }
    return rep;
}

}  // namespace kronreal::cli
