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

#include "jqb/optimizer/gaussian_process.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "jqb/simd/kernels.h"

namespace jqb {

namespace {

constexpr double kLogLengthMin = -4.6;  // 0.01
constexpr double kLogLengthMax = 2.3;   // 10
constexpr double kLogSignalMin = -4.6;
constexpr double kLogSignalMax = 4.6;
constexpr double kLogNoiseMin = -18.4;  // 1e-8
constexpr double kLogNoiseMax = -2.3;   // 0.1

}  // namespace

GpHyper GpHyper::initial(size_t dims) {
    GpHyper h;
    h.log_length.assign(dims, std::log(0.3));
    h.log_signal_var = 0;
    h.log_noise_var = std::log(1e-6);
    return h;
}

void GpHyper::clamp() {
    for (double &l : log_length) {
        l = std::clamp(l, kLogLengthMin, kLogLengthMax);
    }
    log_signal_var = std::clamp(log_signal_var, kLogSignalMin, kLogSignalMax);
    log_noise_var = std::clamp(log_noise_var, kLogNoiseMin, kLogNoiseMax);
}

std::vector<double> pack_hyper(const GpHyper &h) {
    std::vector<double> v = h.log_length;
    v.push_back(h.log_signal_var);
    v.push_back(h.log_noise_var);
    return v;
}

GpHyper unpack_hyper(const std::vector<double> &v) {
    GpHyper h;
    h.log_length.assign(v.begin(), v.end() - 2);
    h.log_signal_var = v[v.size() - 2];
    h.log_noise_var = v.back();
    return h;
}

GaussianProcess::GaussianProcess(size_t dims) : dims_(dims), hyper_(GpHyper::initial(dims)) {
    if (dims == 0) {
        throw std::invalid_argument("GaussianProcess needs at least one dimension");
    }
}

void GaussianProcess::set_data(const std::vector<std::vector<double>> &x, const std::vector<double> &y) {
    if (x.empty() || x.size() != y.size()) {
        throw std::invalid_argument("GP training set must be non-empty with one target per point");
    }
    for (const auto &p : x) {
        if (p.size() != dims_) {
            throw std::invalid_argument("GP training point has the wrong dimension");
        }
    }
    x_ = x;
    size_t n = x.size();
    cols_.assign(dims_ * n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t d = 0; d < dims_; ++d) {
            cols_[d * n + i] = x[i][d];
        }
    }
    y_ = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));
    factorize();
}

void GaussianProcess::set_hyper(const GpHyper &h) {
    if (h.log_length.size() != dims_) {
        throw std::invalid_argument("GP hyperparameters have the wrong dimension");
    }
    hyper_ = h;
    hyper_.clamp();
    if (!x_.empty()) {
        factorize();
    }
}

namespace {

Eigen::MatrixXd covariance(const std::vector<std::vector<double>> &x, const GpHyper &h) {
    size_t n = x.size();
    size_t dims = h.log_length.size();
    std::vector<double> inv(dims);
    for (size_t d = 0; d < dims; ++d) {
        inv[d] = std::exp(-h.log_length[d]);
    }
    double s2 = std::exp(h.log_signal_var);
    Eigen::MatrixXd k(n, n);
    for (size_t i = 0; i < n; ++i) {
        k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = s2;
        for (size_t j = 0; j < i; ++j) {
            double acc = 0;
            for (size_t d = 0; d < dims; ++d) {
                double t = (x[i][d] - x[j][d]) * inv[d];
                acc += t * t;
            }
            double v = s2 * std::exp(-0.5 * acc);
            k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            k(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    return k;
}

}  // namespace

void GaussianProcess::factorize() {
    Eigen::MatrixXd k = covariance(x_, hyper_);
    double noise = std::exp(hyper_.log_noise_var);
    double jitter = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::MatrixXd kk = k;
        kk.diagonal().array() += noise + jitter;
        llt_.compute(kk);
        if (llt_.info() == Eigen::Success) {
            alpha_ = llt_.solve(y_);
            return;
        }
        jitter = jitter == 0 ? 1e-10 : jitter * 100;
    }
    throw std::runtime_error("GP covariance is not positive definite");
}

double GaussianProcess::log_marginal_likelihood(const GpHyper &h, std::vector<double> *grad) const {
    size_t n = x_.size();
    Eigen::MatrixXd kf = covariance(x_, h);
    double noise = std::exp(h.log_noise_var);
    Eigen::MatrixXd k = kf;
    k.diagonal().array() += noise;
    Eigen::LLT<Eigen::MatrixXd> llt(k);
    if (llt.info() != Eigen::Success) {
        if (grad != nullptr) {
            grad->assign(dims_ + 2, 0.0);
        }
        return -std::numeric_limits<double>::infinity();
    }
    Eigen::VectorXd alpha = llt.solve(y_);
    double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    double lml = -0.5 * y_.dot(alpha) - 0.5 * logdet - 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
    if (grad != nullptr) {
        // dLML/dt = 1/2 tr((alpha alpha^T - K^-1) dK/dt)
        Eigen::MatrixXd w = alpha * alpha.transpose() - llt.solve(Eigen::MatrixXd::Identity(k.rows(), k.cols()));
        grad->assign(dims_ + 2, 0.0);
        for (size_t d = 0; d < dims_; ++d) {
            double inv2 = std::exp(-2.0 * h.log_length[d]);
            double g = 0;
            for (size_t i = 0; i < n; ++i) {
                for (size_t j = 0; j < i; ++j) {
                    double diff = x_[i][d] - x_[j][d];
                    auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
                    g += w(ii, jj) * kf(ii, jj) * diff * diff * inv2;
                }
            }
            (*grad)[d] = g;  // symmetric pairs: 2 * 1/2
        }
        (*grad)[dims_] = 0.5 * (w.array() * kf.array()).sum();
        (*grad)[dims_ + 1] = 0.5 * noise * w.trace();
    }
    return lml;
}

double GaussianProcess::fit_hyper(int iterations) {
    if (x_.empty()) {
        throw std::logic_error("fit_hyper called without training data");
    }
    std::vector<double> theta = pack_hyper(hyper_);
    size_t m = theta.size();
    std::vector<double> step(m, 0.1);
    std::vector<double> prev_grad(m, 0.0);
    std::vector<double> grad;
    std::vector<double> best_theta = theta;
    double best = log_marginal_likelihood(hyper_, &grad);
    for (int it = 0; it < iterations; ++it) {
        for (size_t k = 0; k < m; ++k) {
            double s = prev_grad[k] * grad[k];
            if (s > 0) {
                step[k] = std::min(step[k] * 1.2, 1.0);
            } else if (s < 0) {
                step[k] = std::max(step[k] * 0.5, 1e-6);
                grad[k] = 0;
            }
            if (grad[k] > 0) {
                theta[k] += step[k];
            } else if (grad[k] < 0) {
                theta[k] -= step[k];
            }
        }
        prev_grad = grad;
        GpHyper h = unpack_hyper(theta);
        h.clamp();
        theta = pack_hyper(h);
        double v = log_marginal_likelihood(h, &grad);
        if (!std::isfinite(v)) {
            break;
        }
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }
    set_hyper(unpack_hyper(best_theta));
    return best;
}

void GaussianProcess::cross_cov(std::span<const double> q, std::span<double> out) const {
    size_t n = x_.size();
    std::vector<double> inv(dims_);
    for (size_t d = 0; d < dims_; ++d) {
        inv[d] = std::exp(-hyper_.log_length[d]);
    }
    simd::PointColumns pc{cols_.data(), dims_, n, n};
    simd::ard_sq_exp(pc, q, inv, std::exp(hyper_.log_signal_var), out);
}

GpPrediction GaussianProcess::predict(std::span<const double> x) const {
    if (x_.empty()) {
        throw std::logic_error("predict called without training data");
    }
    size_t n = x_.size();
    Eigen::VectorXd ks(static_cast<Eigen::Index>(n));
    cross_cov(x, std::span<double>(ks.data(), n));
    GpPrediction p;
    p.mean = simd::dot(std::span<const double>(ks.data(), n), std::span<const double>(alpha_.data(), n));
    Eigen::VectorXd v = llt_.matrixL().solve(ks);
    p.variance = std::max(0.0, std::exp(hyper_.log_signal_var) - v.squaredNorm());
    return p;
}

void GaussianProcess::predict_batch(const Eigen::MatrixXd &points, Eigen::VectorXd &mean,
                                    Eigen::VectorXd &variance) const {
    if (x_.empty()) {
        throw std::logic_error("predict called without training data");
    }
    size_t n = x_.size();
    Eigen::Index m = points.rows();
    Eigen::MatrixXd ks(static_cast<Eigen::Index>(n), m);
    std::vector<double> q(dims_);
    for (Eigen::Index c = 0; c < m; ++c) {
        for (size_t d = 0; d < dims_; ++d) {
            q[d] = points(c, static_cast<Eigen::Index>(d));
        }
        cross_cov(q, std::span<double>(ks.col(c).data(), n));
    }
    mean.resize(m);
    for (Eigen::Index c = 0; c < m; ++c) {
        mean(c) = simd::dot(std::span<const double>(ks.col(c).data(), n), std::span<const double>(alpha_.data(), n));
    }
    llt_.matrixL().solveInPlace(ks);
    double s2 = std::exp(hyper_.log_signal_var);
    variance = (s2 - ks.colwise().squaredNorm().array()).max(0.0).matrix().transpose();
}

}  // namespace jqb
