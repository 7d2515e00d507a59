// Copyright 2026 The jqbattery Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jqb/optimizer/bayesian.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "jqb/core/random.h"
#include "jqb/optimizer/gaussian_process.h"

namespace jqb {

namespace {

enum Stream : uint64_t { kDesign = 1, kCandidates = 2 };

constexpr size_t kLocalCenters = 5;
constexpr double kLocalScales[] = {0.2, 0.05, 0.01};

std::vector<double> from_unit(const Bounds &b, const std::vector<double> &u) {
    std::vector<double> x(u.size());
    for (size_t d = 0; d < u.size(); ++d) {
        x[d] = b.lower[d] + u[d] * (b.upper[d] - b.lower[d]);
    }
    return x;
}

double sq_dist(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0;
    for (size_t d = 0; d < a.size(); ++d) {
        s += (a[d] - b[d]) * (a[d] - b[d]);
    }
    return s;
}

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

// Indices of evaluations sorted by cost, ties by index.
std::vector<size_t> ranked(const std::vector<double> &y) {
    std::vector<size_t> idx(y.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return y[a] < y[b]; });
    return idx;
}

}  // namespace

double expected_improvement(double mean, double variance, double best, double xi) {
    double sigma = std::sqrt(std::max(variance, 0.0));
    double imp = best - mean - xi;
    if (sigma < 1e-12) {
        return std::max(imp, 0.0);
    }
    double z = imp / sigma;
    double cdf = 0.5 * std::erfc(-z / std::numbers::sqrt2);
    double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    return imp * cdf + sigma * pdf;
}

std::vector<std::vector<double>> maximin_latin_hypercube(size_t n, size_t dims, uint64_t seed, size_t tries) {
    Rng rng(seed);
    std::vector<std::vector<double>> best;
    double best_score = -1;
    for (size_t t = 0; t < std::max<size_t>(tries, 1); ++t) {
        std::vector<std::vector<double>> design(n, std::vector<double>(dims));
        for (size_t d = 0; d < dims; ++d) {
            std::vector<size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng.engine());
            for (size_t i = 0; i < n; ++i) {
                design[i][d] = (static_cast<double>(perm[i]) + rng.uniform()) / static_cast<double>(n);
            }
        }
        double score = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                score = std::min(score, sq_dist(design[i], design[j]));
            }
        }
        if (score > best_score) {
            best_score = score;
            best = std::move(design);
        }
    }
    return best;
}

OptimizationTrace bayesian_optimize(const CostFunction &cost, const Bounds &bounds, const BayesOptions &opt) {
    bounds.validate();
    if (opt.initial_design == 0 || opt.budget < opt.initial_design) {
        throw std::invalid_argument("budget must be at least the initial design size");
    }
    size_t dims = bounds.dims();
    OptimizationTrace trace;
    trace.budget = opt.budget;
    trace.seed = opt.seed;

    std::vector<std::vector<double>> xs;  // unit-cube coordinates
    std::vector<double> ys;
    auto evaluate = [&](const std::vector<double> &u) {
        std::vector<double> x = from_unit(bounds, u);
        double c = cost(x);
        if (!std::isfinite(c)) {
            throw std::runtime_error("cost function returned a non-finite value");
        }
        xs.push_back(u);
        ys.push_back(c);
        record(trace, std::move(x), c);
    };

    for (const auto &u : maximin_latin_hypercube(opt.initial_design, dims, derive_seed(opt.seed, kDesign))) {
        evaluate(u);
    }

    Rng rng(derive_seed(opt.seed, kCandidates));
    GaussianProcess gp(dims);
    size_t last_fit = 0;
    while (xs.size() < opt.budget) {
        if (opt.stop_on_convergence && stalled(trace)) {
            trace.convergence.stopped_early = true;
            break;
        }
        std::vector<size_t> order = ranked(ys);
        const std::vector<double> &incumbent = xs[order[0]];

        // Training subset: everything, or the points nearest the incumbent.
        std::vector<size_t> train(xs.size());
        std::iota(train.begin(), train.end(), 0);
        if (train.size() > opt.max_training) {
            std::vector<double> dist(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) {
                dist[i] = sq_dist(xs[i], incumbent);
            }
            std::stable_sort(train.begin(), train.end(), [&](size_t a, size_t b) { return dist[a] < dist[b]; });
            train.resize(opt.max_training);
        }
        std::vector<std::vector<double>> tx;
        std::vector<double> ty;
        for (size_t i : train) {
            tx.push_back(xs[i]);
            ty.push_back(ys[i]);
        }
        double mu = std::accumulate(ty.begin(), ty.end(), 0.0) / static_cast<double>(ty.size());
        double var = 0;
        for (double v : ty) {
            var += (v - mu) * (v - mu);
        }
        double sd = std::sqrt(var / static_cast<double>(ty.size()));
        if (sd < 1e-12) {
            sd = 1.0;
        }
        for (double &v : ty) {
            v = (v - mu) / sd;
        }
        double best_std = *std::min_element(ty.begin(), ty.end());

        gp.set_data(tx, ty);
        if (last_fit == 0 || xs.size() - last_fit >= opt.refit_every) {
            gp.fit_hyper(opt.rprop_iterations);
            last_fit = xs.size();
        }

        size_t m = opt.uniform_candidates + opt.local_candidates;
        Eigen::MatrixXd cand(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(dims));
        size_t centers = std::min(kLocalCenters, order.size());
        for (size_t c = 0; c < m; ++c) {
            auto row = static_cast<Eigen::Index>(c);
            if (c < opt.uniform_candidates) {
                for (size_t d = 0; d < dims; ++d) {
                    cand(row, static_cast<Eigen::Index>(d)) = rng.uniform();
                }
            } else {
                size_t k = c - opt.uniform_candidates;
                const std::vector<double> &center = xs[order[k % centers]];
                double scale = kLocalScales[(k / centers) % std::size(kLocalScales)];
                for (size_t d = 0; d < dims; ++d) {
                    cand(row, static_cast<Eigen::Index>(d)) = clamp01(center[d] + scale * rng.normal());
                }
            }
        }
        Eigen::VectorXd mean, variance;
        gp.predict_batch(cand, mean, variance);
        std::vector<double> ei(m);
        for (size_t c = 0; c < m; ++c) {
            auto row = static_cast<Eigen::Index>(c);
            ei[c] = expected_improvement(mean(row), variance(row), best_std, opt.xi);
        }
        std::vector<size_t> by_ei(m);
        std::iota(by_ei.begin(), by_ei.end(), 0);
        std::stable_sort(by_ei.begin(), by_ei.end(), [&](size_t a, size_t b) {
            if (ei[a] != ei[b]) {
                return ei[a] > ei[b];
            }
            return mean(static_cast<Eigen::Index>(a)) < mean(static_cast<Eigen::Index>(b));
        });

        std::vector<double> chosen(dims);
        double chosen_ei = -1;
        double chosen_mean = 0;
        for (size_t s = 0; s < std::min(opt.refine_starts, m); ++s) {
            size_t c = by_ei[s];
            std::vector<double> x(dims);
            for (size_t d = 0; d < dims; ++d) {
                x[d] = cand(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(d));
            }
            double cur = ei[c];
            double cur_mean = mean(static_cast<Eigen::Index>(c));
            double step = 0.02;
            for (size_t it = 0; it < opt.refine_steps; ++it) {
                std::vector<double> y(dims);
                for (size_t d = 0; d < dims; ++d) {
                    y[d] = clamp01(x[d] + step * rng.normal());
                }
                GpPrediction p = gp.predict(y);
                double v = expected_improvement(p.mean, p.variance, best_std, opt.xi);
                if (v > cur) {
                    cur = v;
                    cur_mean = p.mean;
                    x = std::move(y);
                } else {
                    step *= 0.7;
                }
            }
            if (cur > chosen_ei || (cur == chosen_ei && cur_mean < chosen_mean)) {
                chosen_ei = cur;
                chosen_mean = cur_mean;
                chosen = x;
            }
        }

        // Never re-evaluate a point already in the set; explore instead.
        bool duplicate = false;
        for (const auto &u : xs) {
            if (sq_dist(u, chosen) < 1e-20) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) {
            for (size_t d = 0; d < dims; ++d) {
                chosen[d] = rng.uniform();
            }
        }
        evaluate(chosen);
    }
    update_convergence(trace);
    return trace;
}

}  // namespace jqb
