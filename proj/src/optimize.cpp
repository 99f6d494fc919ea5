#include "qaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cobyla/cobyla.h"
#include "qaoa/rng.hpp"

namespace qaoa {

void ObjectiveTrace::record(const std::vector<double>& params, double value) {
    evaluations.emplace_back(params, value);
    eval_count = static_cast<int>(evaluations.size());
    if (evaluations.size() == 1 || value < best_value) {
        best_value = value;
        best_params = params;
    }
}

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& vertices) {
    double diameter = 0.0;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            double dist2 = 0.0;
            for (std::size_t d = 0; d < vertices[a].size(); ++d) {
                const double diff = vertices[a][d] - vertices[b][d];
                dist2 += diff * diff;
            }
            diameter = std::max(diameter, std::sqrt(dist2));
        }
    return diameter;
}

}  // namespace

namespace {

ObjectiveTrace nelder_mead_minimize(const Objective& objective,
                                    const std::vector<double>& x0, int budget,
                                    const LocalOptions& options) {
    const int dim = static_cast<int>(x0.size());
    ObjectiveTrace trace;
    auto exhausted = [&]() { return trace.aborted || trace.eval_count >= budget; };
    auto evaluate = [&](const std::vector<double>& x) -> double {
        if (exhausted()) return std::numeric_limits<double>::infinity();
        const double value = objective(x);
        if (!std::isfinite(value)) {
            trace.aborted = true;
            return std::numeric_limits<double>::infinity();
        }
        trace.record(x, value);
        return value;
    };

    // Adaptive Nelder-Mead coefficients (dimension-dependent variant).
    const double n = static_cast<double>(dim);
    const double reflect = 1.0;
    const double expand = 1.0 + 2.0 / n;
    const double contract = 0.75 - 0.5 / n;
    const double shrink = 1.0 - 1.0 / n;

    std::vector<std::vector<double>> vertices(dim + 1, x0);
    std::vector<double> values(dim + 1);
    for (int d = 0; d < dim; ++d) vertices[d + 1][d] += options.initial_step;
    for (int v = 0; v <= dim && !exhausted(); ++v) values[v] = evaluate(vertices[v]);
    if (trace.aborted || trace.eval_count <= dim) return trace;

    std::vector<int> order(dim + 1);
    while (!exhausted()) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return values[a] < values[b]; });
        {
            std::vector<std::vector<double>> sorted_vertices(dim + 1);
            std::vector<double> sorted_values(dim + 1);
            for (int v = 0; v <= dim; ++v) {
                sorted_vertices[v] = vertices[order[v]];
                sorted_values[v] = values[order[v]];
            }
            vertices.swap(sorted_vertices);
            values.swap(sorted_values);
        }
        if (simplex_diameter(vertices) < options.convergence_radius) break;

        std::vector<double> centroid(dim, 0.0);
        for (int v = 0; v < dim; ++v)
            for (int d = 0; d < dim; ++d) centroid[d] += vertices[v][d] / n;

        auto along = [&](double t) {
            std::vector<double> point(dim);
            for (int d = 0; d < dim; ++d)
                point[d] = centroid[d] + t * (centroid[d] - vertices[dim][d]);
            return point;
        };

        const std::vector<double> reflected = along(reflect);
        const double f_reflected = evaluate(reflected);
        if (exhausted()) break;

        if (f_reflected < values[0]) {
            const std::vector<double> expanded = along(expand);
            const double f_expanded = evaluate(expanded);
            if (f_expanded < f_reflected) {
                vertices[dim] = expanded;
                values[dim] = f_expanded;
            } else {
                vertices[dim] = reflected;
                values[dim] = f_reflected;
            }
        } else if (f_reflected < values[dim - 1]) {
            vertices[dim] = reflected;
            values[dim] = f_reflected;
        } else if (f_reflected < values[dim]) {
            const std::vector<double> contracted = along(contract);
            const double f_contracted = evaluate(contracted);
            if (f_contracted <= f_reflected) {
                vertices[dim] = contracted;
                values[dim] = f_contracted;
            } else {
                for (int v = 1; v <= dim && !exhausted(); ++v) {
                    for (int d = 0; d < dim; ++d)
                        vertices[v][d] =
                            vertices[0][d] + shrink * (vertices[v][d] - vertices[0][d]);
                    values[v] = evaluate(vertices[v]);
                }
            }
        } else {
            const std::vector<double> contracted = along(-contract);
            const double f_contracted = evaluate(contracted);
            if (f_contracted < values[dim]) {
                vertices[dim] = contracted;
                values[dim] = f_contracted;
            } else {
                for (int v = 1; v <= dim && !exhausted(); ++v) {
                    for (int d = 0; d < dim; ++d)
                        vertices[v][d] =
                            vertices[0][d] + shrink * (vertices[v][d] - vertices[0][d]);
                    values[v] = evaluate(vertices[v]);
                }
            }
        }
    }
    return trace;
}

// Linear-approximation trust-region descent via the reverse-communication
// COBYLA driver (unconstrained: m = 0). The driver proposes trial points; the
// loop below evaluates them, records the trace, and enforces the budget and
// the abort-on-non-finite contract.
ObjectiveTrace cobyla_minimize(const Objective& objective,
                               const std::vector<double>& x0, int budget,
                               const LocalOptions& options) {
    const int dim = static_cast<int>(x0.size());
    ObjectiveTrace trace;

    cobyla_context_t* ctx =
        cobyla_create(dim, 0, options.initial_radius, options.convergence_radius,
                      /*iprint=*/0, /*maxfun=*/budget);
    if (ctx == nullptr) throw std::runtime_error("cobyla_create failed");

    std::vector<double> x = x0;
    double dummy_con = 0.0;
    int status = cobyla_get_status(ctx);
    while (status == COBYLA_ITERATE) {
        const double value = objective(x);
        if (!std::isfinite(value)) {
            trace.aborted = true;
            break;
        }
        trace.record(x, value);
        if (trace.eval_count >= budget) break;
        status = cobyla_iterate(ctx, value, x.data(), &dummy_con);
    }
    cobyla_delete(ctx);
    if (status == COBYLA_CORRUPTED || status == COBYLA_BAD_ADDRESS)
        throw std::runtime_error("cobyla workspace error");
    return trace;
}

}  // namespace

ObjectiveTrace local_minimize(const Objective& objective,
                              const std::vector<double>& x0, int budget,
                              const LocalOptions& options) {
    const int dim = static_cast<int>(x0.size());
    if (dim < 1) throw std::invalid_argument("x0 must be non-empty");
    for (double x : x0)
        if (!std::isfinite(x)) throw std::invalid_argument("x0 must be finite");
    if (budget < dim + 2)
        throw std::invalid_argument("budget must be at least dim + 2");

    if (options.method == LocalMethod::nelder_mead)
        return nelder_mead_minimize(objective, x0, budget, options);
    return cobyla_minimize(objective, x0, budget, options);
}

namespace {

// Parzen mixture over one dimension, truncated to [lo, hi].
struct ParzenDim {
    std::vector<double> means;
    std::vector<double> widths;
    double lo = 0.0;
    double hi = 1.0;

    static ParzenDim fit(std::vector<double> points, double lo, double hi) {
        ParzenDim kde;
        kde.lo = lo;
        kde.hi = hi;
        // Uniform-equivalent prior component keeps the density supported
        // everywhere in the box.
        points.push_back(0.5 * (lo + hi));
        std::sort(points.begin(), points.end());
        kde.means = points;
        kde.widths.resize(points.size());
        const double span = hi - lo;
        for (std::size_t k = 0; k < points.size(); ++k) {
            double left = (k > 0) ? points[k] - points[k - 1] : span;
            double right = (k + 1 < points.size()) ? points[k + 1] - points[k] : span;
            double width = std::max(left, right);
            kde.widths[k] = std::clamp(width, span / 100.0, span);
        }
        kde.widths.back() = span;  // the prior component stays broad
        return kde;
    }

    double log_pdf(double x) const {
        constexpr double sqrt2 = 1.4142135623730951;
        constexpr double sqrt2pi = 2.5066282746310002;
        double density = 0.0;
        for (std::size_t k = 0; k < means.size(); ++k) {
            const double s = widths[k];
            const double t = (x - means[k]) / s;
            // Truncated normal over [lo, hi].
            const double mass = 0.5 * (std::erf((hi - means[k]) / (s * sqrt2)) -
                                       std::erf((lo - means[k]) / (s * sqrt2)));
            density += std::exp(-0.5 * t * t) / (s * sqrt2pi * std::max(mass, 1e-12));
        }
        return std::log(std::max(density / means.size(), 1e-300));
    }

    double draw(Rng& rng) const {
        const std::size_t k = static_cast<std::size_t>(rng.below(means.size()));
        for (int attempt = 0; attempt < 64; ++attempt) {
            const double x = rng.normal(means[k], widths[k]);
            if (x >= lo && x <= hi) return x;
        }
        return std::clamp(means[k], lo, hi);
    }
};

}  // namespace

ObjectiveTrace global_minimize(const Objective& objective,
                               const std::vector<std::pair<double, double>>& bounds,
                               int trials, std::uint64_t seed) {
    const int dim = static_cast<int>(bounds.size());
    if (dim < 1) throw std::invalid_argument("bounds must be non-empty");
    for (auto [lo, hi] : bounds)
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("each bound must satisfy lo < hi");
    if (trials < 1) throw std::invalid_argument("trials must be positive");

    Rng rng(seed);
    ObjectiveTrace trace;
    const int startup = std::max(16, trials / 10);
    const int candidates_per_trial = 24;

    auto evaluate = [&](const std::vector<double>& x) {
        const double value = objective(x);
        if (!std::isfinite(value)) {
            trace.aborted = true;
            return;
        }
        trace.record(x, value);
    };

    for (int trial = 0; trial < trials && !trace.aborted; ++trial) {
        std::vector<double> point(dim);
        if (trial < startup || static_cast<int>(trace.evaluations.size()) < 4) {
            for (int d = 0; d < dim; ++d)
                point[d] = rng.uniform(bounds[d].first, bounds[d].second);
            evaluate(point);
            continue;
        }

        // Split observations into a low-value set and the rest, fit a Parzen
        // density to each, and pick the candidate with the best density ratio.
        std::vector<int> order(trace.evaluations.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return trace.evaluations[a].second < trace.evaluations[b].second;
        });
        const int n_good = std::clamp(
            static_cast<int>(std::ceil(0.25 * order.size())), 2, 25);

        std::vector<ParzenDim> good(dim), rest(dim);
        for (int d = 0; d < dim; ++d) {
            std::vector<double> good_points, rest_points;
            for (std::size_t k = 0; k < order.size(); ++k) {
                const double x = trace.evaluations[order[k]].first[d];
                (static_cast<int>(k) < n_good ? good_points : rest_points).push_back(x);
            }
            good[d] = ParzenDim::fit(std::move(good_points), bounds[d].first,
                                     bounds[d].second);
            rest[d] = ParzenDim::fit(std::move(rest_points), bounds[d].first,
                                     bounds[d].second);
        }

        double best_score = -std::numeric_limits<double>::infinity();
        for (int c = 0; c < candidates_per_trial; ++c) {
            std::vector<double> candidate(dim);
            double score = 0.0;
            for (int d = 0; d < dim; ++d) {
                candidate[d] = good[d].draw(rng);
                score += good[d].log_pdf(candidate[d]) - rest[d].log_pdf(candidate[d]);
            }
            if (score > best_score) {
                best_score = score;
                point = std::move(candidate);
            }
        }
        evaluate(point);
    }
    return trace;
}

void write_trace_jsonl(const ObjectiveTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.precision(17);
    for (const auto& [params, value] : trace.evaluations) {
        out << "{\"params\": [";
        for (std::size_t d = 0; d < params.size(); ++d)
            out << (d ? ", " : "") << params[d];
        out << "], \"value\": " << value << "}\n";
    }
}

}  // namespace qaoa
