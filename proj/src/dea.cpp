#include "greyrank/dea.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "greyrank/errors.hpp"
#include "greyrank/lp.hpp"

namespace greyrank {

namespace {

constexpr double kWeightSumTolerance = 0.01;  // admits published rounded vectors
constexpr double kDegenerateSpread = 1e-12;

void validate_weights(std::span<const double> e, std::size_t n) {
    if (e.size() != n)
        throw ValidationError("dea: expected " + std::to_string(n) +
                              " weight bounds, got " + std::to_string(e.size()));
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(e[j]) || e[j] <= 0.0)
            throw ValidationError("dea: weight bound " + std::to_string(j) +
                                  " must be positive and finite");
        sum += e[j];
    }
    if (std::fabs(sum - 1.0) > kWeightSumTolerance)
        throw ValidationError("dea: weight bounds sum to " + std::to_string(sum) +
                              ", expected 1");
}

void check_index(const CoefficientMatrix& xi, std::size_t k) {
    if (k >= xi.alternative_count())
        throw ValidationError("dea: alternative index " + std::to_string(k) +
                              " out of range");
}

[[noreturn]] void lp_failure(const char* model, const CoefficientMatrix& xi,
                             std::size_t k, const LpSolution& sol) {
    throw NumericError(std::string("dea: ") + model + " program for alternative '" +
                       xi.alternatives[k] + "' ended " +
                       (sol.status == LpStatus::infeasible ? "infeasible" : "unbounded") +
                       "; the model is feasible and bounded by construction, so the "
                       "coefficient data is corrupt");
}

/// Shared multiplier-model builder.  direction +1 builds the optimistic
/// maximisation with <= rows, -1 the pessimistic minimisation with >= rows.
MultiplierResult multiplier_model(const CoefficientMatrix& xi, std::size_t k,
                                  const DeaConfig& cfg, int direction) {
    check_index(xi, k);
    cfg.validate(xi.attribute_count());
    const std::size_t m = xi.alternative_count();
    const std::size_t n = xi.attribute_count();
    const bool vrs = cfg.variant == DeaVariant::bounded_vrs;
    const std::size_t vars = vrs ? n + 1 : n;  // trailing intercept when present

    LinearProgram lp;
    lp.sense = direction > 0 ? Sense::maximize : Sense::minimize;
    lp.objective.assign(vars, 0.0);
    for (std::size_t j = 0; j < n; ++j) lp.objective[j] = xi.at(k, j);
    if (vrs) lp.objective[n] = -direction;  // -w_0 optimistic, +w'_0 pessimistic

    lp.constraints.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Constraint c;
        c.coefficients.assign(vars, 0.0);
        for (std::size_t j = 0; j < n; ++j) c.coefficients[j] = xi.at(i, j);
        if (vrs) c.coefficients[n] = -direction;
        c.relation = direction > 0 ? Relation::less_equal : Relation::greater_equal;
        c.rhs = 1.0;
        lp.constraints.push_back(std::move(c));
    }

    lp.bounds.assign(vars, VariableBound::at_least(0.0));
    if (vrs) {
        for (std::size_t j = 0; j < n; ++j)
            lp.bounds[j] = VariableBound::at_least(cfg.weight_bounds[j]);
        lp.bounds[n] = VariableBound::unbounded();
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal)
        lp_failure(direction > 0 ? "optimistic grade" : "pessimistic grade", xi, k, sol);

    MultiplierResult out;
    out.grade = sol.objective;
    out.weights.assign(sol.variables.begin(), sol.variables.begin() + n);
    out.intercept = vrs ? sol.variables[n] : 0.0;
    return out;
}

/// Shared envelopment-model builder.  direction +1 measures shortfall below
/// the best frontier, -1 excess above the worst frontier.
EnvelopmentResult envelopment_model(const CoefficientMatrix& xi, std::size_t k,
                                    std::span<const double> e, int direction) {
    check_index(xi, k);
    const std::size_t m = xi.alternative_count();
    const std::size_t n = xi.attribute_count();
    validate_weights(e, n);

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(m + n, 0.0);
    for (std::size_t j = 0; j < n; ++j) lp.objective[m + j] = e[j];

    lp.constraints.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Constraint c;
        c.coefficients.assign(m + n, 0.0);
        for (std::size_t i = 0; i < m; ++i) c.coefficients[i] = xi.at(i, j);
        c.coefficients[m + j] = -direction;  // -s+ shortfall, +s- excess
        c.relation = Relation::equal;
        c.rhs = xi.at(k, j);
        lp.constraints.push_back(std::move(c));
    }
    Constraint convexity;
    convexity.coefficients.assign(m + n, 0.0);
    for (std::size_t i = 0; i < m; ++i) convexity.coefficients[i] = 1.0;
    convexity.relation = Relation::equal;
    convexity.rhs = 1.0;
    lp.constraints.push_back(std::move(convexity));

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal)
        lp_failure(direction > 0 ? "shortfall" : "excess", xi, k, sol);

    EnvelopmentResult out;
    out.inefficiency = sol.objective;
    out.intensities.assign(sol.variables.begin(), sol.variables.begin() + m);
    out.slacks.assign(sol.variables.begin() + m, sol.variables.end());
    return out;
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned cap = requested;
    if (cap == 0) {
        if (const char* env = std::getenv("GREYRANK_THREADS")) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v > 0 && v <= 4096)
                cap = static_cast<unsigned>(v);
        }
    }
    if (cap == 0) cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    return static_cast<unsigned>(std::min<std::size_t>(cap, jobs));
}

template <typename Fn>
auto stage(const char* label, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(label) + ": " + e.what());
    } catch (const NumericError& e) {
        throw NumericError(std::string(label) + ": " + e.what());
    } catch (const IoError& e) {
        throw IoError(std::string(label) + ": " + e.what());
    }
}

}  // namespace

const char* to_string(DeaVariant v) {
    return v == DeaVariant::bounded_vrs ? "bounded-vrs" : "crs-unbounded";
}

void DeaConfig::validate(std::size_t attribute_count) const {
    if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0)
        throw ValidationError("dea: beta must lie in [0, 1]");
    if (variant == DeaVariant::bounded_vrs) {
        validate_weights(weight_bounds, attribute_count);
    } else if (!weight_bounds.empty()) {
        throw ValidationError("dea: crs-unbounded takes no weight bounds");
    }
}

MultiplierResult optimistic_grade(const CoefficientMatrix& xi, std::size_t k,
                                  const DeaConfig& cfg) {
    return multiplier_model(xi, k, cfg, +1);
}

MultiplierResult pessimistic_grade(const CoefficientMatrix& xi, std::size_t k,
                                   const DeaConfig& cfg) {
    return multiplier_model(xi, k, cfg, -1);
}

EnvelopmentResult optimistic_slacks(const CoefficientMatrix& xi, std::size_t k,
                                    std::span<const double> priorities) {
    return envelopment_model(xi, k, priorities, +1);
}

EnvelopmentResult pessimistic_slacks(const CoefficientMatrix& xi, std::size_t k,
                                     std::span<const double> priorities) {
    return envelopment_model(xi, k, priorities, -1);
}

std::vector<double> compromise(std::span<const double> optimistic,
                               std::span<const double> pessimistic, double beta) {
    if (optimistic.size() != pessimistic.size())
        throw ValidationError("dea: grade vectors differ in length");
    if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0)
        throw ValidationError("dea: beta must lie in [0, 1]");
    const std::size_t m = optimistic.size();
    std::vector<double> out(m, 0.0);
    if (m == 0) return out;
    for (std::size_t k = 0; k < m; ++k)
        if (!std::isfinite(optimistic[k]) || !std::isfinite(pessimistic[k]))
            throw ValidationError("dea: grades must be finite");

    const auto [opt_min, opt_max] = std::minmax_element(optimistic.begin(), optimistic.end());
    const auto [pes_min, pes_max] = std::minmax_element(pessimistic.begin(), pessimistic.end());
    const double opt_spread = *opt_max - *opt_min;
    const double pes_spread = *pes_max - *pes_min;
    for (std::size_t k = 0; k < m; ++k) {
        double d = 0.0;
        if (opt_spread >= kDegenerateSpread)
            d += beta * (optimistic[k] - *opt_min) / opt_spread;
        if (pes_spread >= kDegenerateSpread)
            d += (1.0 - beta) * (pessimistic[k] - *pes_min) / pes_spread;
        out[k] = d;
    }
    return out;
}

std::vector<int> rank_dense(std::span<const double> scores, double tie_tolerance) {
    for (double s : scores)
        if (!std::isfinite(s)) throw ValidationError("dea: scores must be finite");
    const std::size_t m = scores.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<int> ranks(m, 0);
    int rank = 0;
    for (std::size_t t = 0; t < m; ++t) {
        if (t == 0 || scores[order[t - 1]] - scores[order[t]] > tie_tolerance) ++rank;
        ranks[order[t]] = rank;
    }
    return ranks;
}

GradeReport full_pipeline(const Dataset& data,
                          const std::optional<PairwiseMatrix>& pairwise,
                          const PipelineOptions& options) {
    stage("dataset", [&] { data.validate(); return 0; });
    if (!std::isfinite(options.alpha) || options.alpha < 0.0 || options.alpha > 1.0)
        throw ValidationError("pipeline: alpha must lie in [0, 1]");

    const std::size_t m = data.alternative_count();
    const std::size_t n = data.attribute_count();

    std::vector<Interval> raw;
    raw.reserve(m * n);
    stage("alpha-cut", [&] {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                raw.push_back(data.cell_interval(i, j, options.alpha));
        return 0;
    });

    GradeReport report;
    report.alpha = options.alpha;
    report.rho = options.rho;
    report.beta = options.beta;
    report.variant = options.variant;
    report.comparability = stage("normalize", [&] {
        return build_comparability(data.alternatives, data.attributes, raw);
    });
    report.reference = reference_sequence(report.comparability);
    report.coefficients = stage("coefficients", [&] {
        return grey_coefficients(report.comparability, report.reference, options.rho);
    });

    if (pairwise) {
        if (pairwise->size() != n)
            throw ValidationError("pipeline: pairwise matrix is " +
                                  std::to_string(pairwise->size()) + "x" +
                                  std::to_string(pairwise->size()) + " but the dataset has " +
                                  std::to_string(n) + " attributes");
        const PriorityVector pv =
            stage("priorities", [&] { return principal_eigenvector(*pairwise); });
        report.priorities = pv.weights;
        report.lambda_max = pv.lambda_max;
        report.consistency_ratio = pv.consistency_ratio;
    }

    DeaConfig cfg;
    cfg.variant = options.variant;
    cfg.beta = options.beta;
    if (options.variant == DeaVariant::bounded_vrs) {
        if (!pairwise)
            throw ValidationError("pipeline: bounded-vrs needs a pairwise matrix for the "
                                  "weight bounds; pass one or choose crs-unbounded");
        cfg.weight_bounds = report.priorities;
    }
    stage("grades", [&] { cfg.validate(n); return 0; });

    const bool slacks = options.with_slacks && options.variant == DeaVariant::bounded_vrs;
    report.rows.assign(m, GradeRow{});
    const unsigned workers = resolve_threads(options.max_threads, m);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= m) return;
            try {
                GradeRow& row = report.rows[k];
                row.alternative = data.alternatives[k];
                row.optimistic = optimistic_grade(report.coefficients, k, cfg);
                row.pessimistic = pessimistic_grade(report.coefficients, k, cfg);
                if (slacks) {
                    row.shortfall = optimistic_slacks(report.coefficients, k, cfg.weight_bounds);
                    row.excess = pessimistic_slacks(report.coefficients, k, cfg.weight_bounds);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure)
        stage("grades", [&]() -> int { std::rethrow_exception(failure); });

    std::vector<double> opt(m), pes(m);
    for (std::size_t k = 0; k < m; ++k) {
        opt[k] = report.rows[k].optimistic.grade;
        pes[k] = report.rows[k].pessimistic.grade;
    }
    const auto [opt_min, opt_max] = std::minmax_element(opt.begin(), opt.end());
    const auto [pes_min, pes_max] = std::minmax_element(pes.begin(), pes.end());
    report.optimistic_degenerate = *opt_max - *opt_min < kDegenerateSpread;
    report.pessimistic_degenerate = *pes_max - *pes_min < kDegenerateSpread;

    const std::vector<double> delta = compromise(opt, pes, options.beta);
    const std::vector<int> ranks = rank_dense(delta);
    for (std::size_t k = 0; k < m; ++k) {
        report.rows[k].compromise = delta[k];
        report.rows[k].rank = ranks[k];
    }
    return report;
}

}  // namespace greyrank
