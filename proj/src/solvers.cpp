// SPDX-License-Identifier: Apache-2.0
//
// wiretap: secrecy-rate toolkit for complex MIMO wiretap channels
// Copyright (C) 2026 The wiretap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "wiretap/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace wiretap
{
    std::string_view to_string(SolverMethod m)
    {
        return m == SolverMethod::dc_iteration ? "dc-iteration" : "projected-gradient";
    }

    SolverMethod parse_solver_method(std::string_view s)
    {
        if (s == "projected-gradient" || s == "pg")
            return SolverMethod::projected_gradient;
        if (s == "dc-iteration" || s == "dc")
            return SolverMethod::dc_iteration;
        throw ConfigError("unknown solver method '" + std::string(s) + "'");
    }

    void SolverConfig::validate() const
    {
        if (!(tol_increase > 0.0))
            throw ConfigError("tol_increase must be positive");
        if (!(step_init > 0.0))
            throw ConfigError("step_init must be positive");
        if (max_iters == 0)
            throw ConfigError("max_iters must be at least 1");
        if (!(armijo_c > 0.0 && armijo_c < 1.0) || !(armijo_shrink > 0.0 && armijo_shrink < 1.0))
            throw ConfigError("Armijo parameters must lie in (0, 1)");
    }

    PowerBudget::PowerBudget(double P) : P_(P)
    {
        if (!(P > 0.0) || !std::isfinite(P))
            throw ConfigError("power budget must be positive and finite");
    }

    PowerBudget PowerBudget::from_snr_db(double snr_db)
    {
        return PowerBudget(2.0 * std::pow(10.0, snr_db / 10.0));
    }

    double PowerBudget::snr_db() const
    {
        return 10.0 * std::log10(P_ / 2.0);
    }

    // ---------- gradients and projections ----------

    namespace
    {
        ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

        // H^H (I + H X H^H)^{-1} H
        ComplexMatrix output_gradient(const ComplexMatrix &H, const ComplexMatrix &X)
        {
            ComplexMatrix M = identity(H.rows()) + H * X * H.adjoint();
            return H.adjoint() * M.llt().solve(H);
        }

        double logdet_output(const ComplexMatrix &H, const ComplexMatrix &X)
        {
            return logdet_pd(HermitianMatrix::symmetrize(identity(H.rows()) + H * X * H.adjoint()));
        }

        double inner(const ComplexMatrix &G, const ComplexMatrix &D)
        {
            return (G.adjoint() * D).trace().real();
        }
    }

    HermitianMatrix rate_gradient_proper(const ChannelPair &ch, const HermitianMatrix &K)
    {
        if (K.dim() != ch.nt())
            throw DimensionError("covariance dimension must equal n_t");
        if (!is_psd(K))
            throw NotPositiveSemidefinite("transmit covariance is not positive semidefinite");
        return HermitianMatrix::symmetrize(output_gradient(ch.legitimate(), K.matrix()) -
                                           output_gradient(ch.eavesdropper(), K.matrix()));
    }

    HermitianMatrix rate_gradient_general(const ChannelPair &ch, const AugmentedCovariance &aug)
    {
        if (aug.dim() != ch.nt())
            throw DimensionError("covariance dimension must equal n_t");
        const ComplexMatrix X = aug.augmented().matrix();
        return HermitianMatrix::symmetrize(0.5 * (output_gradient(augment_channel(ch.legitimate()), X) -
                                                  output_gradient(augment_channel(ch.eavesdropper()), X)));
    }

    HermitianMatrix project_psd_trace(const HermitianMatrix &X, double budget)
    {
        if (!(budget >= 0.0))
            throw ConfigError("trace budget must be non-negative");
        auto [vals, vecs] = eigen_decompose(X);
        Eigen::VectorXd w = vals.cwiseMax(0.0);
        if (w.sum() > budget)
        {
            double lo = 0.0, hi = w.maxCoeff();
            for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it)
            {
                const double mid = 0.5 * (lo + hi);
                if ((w.array() - mid).cwiseMax(0.0).sum() > budget)
                    lo = mid;
                else
                    hi = mid;
            }
            w = (w.array() - hi).cwiseMax(0.0);
        }
        return HermitianMatrix::symmetrize(vecs * w.asDiagonal() * vecs.adjoint());
    }

    HermitianMatrix project_to_budget(const HermitianMatrix &K, const PowerBudget &budget)
    {
        return project_psd_trace(K, budget.power());
    }

    // ---------- ascent engine ----------

    namespace
    {
        // scale * [log det(I + gain X gain^H) - log det(I + eve X eve^H)]
        struct RateModel
        {
            ComplexMatrix gain;
            ComplexMatrix eve;
            double scale = 1.0;

            double value(const ComplexMatrix &X) const
            {
                return scale * (logdet_output(gain, X) - logdet_output(eve, X));
            }

            ComplexMatrix gradient(const ComplexMatrix &X) const
            {
                ComplexMatrix G = scale * (output_gradient(gain, X) - output_gradient(eve, X));
                return 0.5 * (G + G.adjoint());
            }
        };

        enum class Structure
        {
            plain,            // any Hermitian matrix
            augmented,        // [[K, Kt], [Kt*, K*]]
            augmented_proper  // [[K, 0], [0, K*]]
        };

        ComplexMatrix repair_augmented(const ComplexMatrix &X, bool zero_off_diagonal)
        {
            const Index n = X.rows() / 2;
            ComplexMatrix K = 0.5 * (X.topLeftCorner(n, n) + X.bottomRightCorner(n, n).conjugate());
            ComplexMatrix Kt = ComplexMatrix::Zero(n, n);
            if (!zero_off_diagonal)
                Kt = 0.5 * (X.topRightCorner(n, n) + X.bottomLeftCorner(n, n).conjugate());
            return assemble_augmented(K, Kt);
        }

        struct FeasibleSet
        {
            double budget;
            Structure structure;

            HermitianMatrix repair(const ComplexMatrix &X) const
            {
                if (structure == Structure::plain)
                    return HermitianMatrix::symmetrize(X);
                return HermitianMatrix::symmetrize(repair_augmented(X, structure == Structure::augmented_proper));
            }

            HermitianMatrix project(const ComplexMatrix &X) const
            {
                return repair(project_psd_trace(repair(X), budget).matrix());
            }
        };

        struct AscentResult
        {
            HermitianMatrix point;
            double value = 0.0;
            std::vector<TracePoint> trace;
            bool converged = false;
        };

        // Stopping test on the per-iteration improvement. A run stops once the
        // improvement drops below tol and the tail it predicts is also below
        // tol: with linear convergence at ratio rho the remaining gain is about
        // step * rho / (1 - rho). rho is the largest step-to-step ratio among
        // the last few improvements, so one unusually short step does not end
        // a slowly converging run. Improvements below tol / 1000 always stop.
        class StopRule
        {
        public:
            explicit StopRule(double tol) : tol_(tol) {}

            bool stop(double improvement)
            {
                history_.push_back(improvement);
                if (improvement >= tol_)
                    return false;
                if (improvement < 1e-3 * tol_ || history_.size() < 2)
                    return true;
                if (!(improvement > 0.0))
                    return true;
                const std::size_t n = history_.size();
                const std::size_t m = std::min<std::size_t>(window, n - 1);
                double rho = 0.0;
                for (std::size_t j = n - m; j < n; ++j)
                {
                    if (!(history_[j - 1] > 0.0))
                        break;
                    rho = std::max(rho, history_[j] / history_[j - 1]);
                }
                return rho < 1.0 && improvement * rho / (1.0 - rho) < tol_;
            }

        private:
            static constexpr std::size_t window = 5;
            double tol_;
            std::vector<double> history_;
        };

        AscentResult projected_gradient_ascent(const RateModel &model, const FeasibleSet &set, const HermitianMatrix &start,
                                               const SolverConfig &cfg, double tol)
        {
            AscentResult res;
            HermitianMatrix X = set.project(start.matrix());
            double f = model.value(X.matrix());
            res.trace.push_back({0, f});
            // Steps are taken along gradient / scale, i.e. the gradient in the
            // (K, Kt) coordinates for augmented models.
            const double dir_scale = 1.0 / model.scale;
            double t = cfg.step_init;
            ComplexMatrix Xprev, Dprev;
            StopRule rule(tol);

            for (std::size_t it = 1; it <= cfg.max_iters; ++it)
            {
                const ComplexMatrix G = model.gradient(X.matrix());
                const ComplexMatrix D = dir_scale * G;
                if (it > 1)
                {
                    // Barzilai-Borwein (short) step from the last move; the
                    // Armijo test below keeps the iteration monotone.
                    const ComplexMatrix S = X.matrix() - Xprev;
                    const ComplexMatrix Y = Dprev - D;
                    const double sy = inner(S, Y), yy = inner(Y, Y);
                    if (sy > 0.0 && yy > 0.0)
                        t = std::clamp(sy / yy, 1e-10, 1e10);
                }
                Xprev = X.matrix();
                Dprev = D;

                auto trial = [&](double step, HermitianMatrix &Xn, double &fn)
                {
                    Xn = set.project(X.matrix() + step * D);
                    fn = model.value(Xn.matrix());
                    return fn >= f + cfg.armijo_c * inner(G, Xn.matrix() - X.matrix());
                };

                HermitianMatrix Xn;
                double fn = 0.0;
                bool accepted = false, first = true, first_accepted = false;
                while (t >= 1e-14)
                {
                    if (trial(t, Xn, fn))
                    {
                        accepted = true;
                        first_accepted = first;
                        break;
                    }
                    first = false;
                    t *= cfg.armijo_shrink;
                }
                if (!accepted)
                {
                    // no ascent step exists at machine precision: stationary
                    t = cfg.step_init;
                    res.converged = true;
                    break;
                }
                if (first_accepted)
                {
                    // Extrapolate while longer steps keep improving; flat
                    // regions of log-det objectives otherwise trip the
                    // increase-based stopping rule before the optimum.
                    bool extended = false;
                    for (int k = 0; k < 50; ++k)
                    {
                        HermitianMatrix X2;
                        double f2 = 0.0;
                        if (!trial(2.0 * t, X2, f2) || !(f2 > fn))
                            break;
                        const bool saturated = (X2.matrix() - Xn.matrix()).norm() <= 1e-15 * std::max(1.0, Xn.matrix().norm());
                        t *= 2.0;
                        Xn = std::move(X2);
                        fn = f2;
                        extended = true;
                        if (saturated)
                            break;
                    }
                    // An accepted step can still overshoot the maximum along
                    // the search path; shorter steps are tried while they improve.
                    for (int k = 0; !extended && k < 50; ++k)
                    {
                        HermitianMatrix X2;
                        double f2 = 0.0;
                        trial(0.5 * t, X2, f2);
                        if (!(f2 > fn))
                            break;
                        t *= 0.5;
                        Xn = std::move(X2);
                        fn = f2;
                    }
                }

                const double increase = fn - f;
                X = std::move(Xn);
                f = fn;
                res.trace.push_back({it, f});
                if (rule.stop(increase))
                {
                    res.converged = true;
                    break;
                }
            }
            res.point = X;
            res.value = f;
            return res;
        }

        // argmax scale * log det(I + gain X gain^H) - tr(lin X) over PSD X, tr X <= budget.
        ComplexMatrix water_fill(const ComplexMatrix &gain, double scale, const HermitianMatrix &lin, double budget)
        {
            const Index n = lin.dim();
            const ComplexMatrix GtG = gain.adjoint() * gain;

            auto solve = [&](double mu)
            {
                Spectrum w = eigen_decompose(HermitianMatrix::symmetrize(lin.matrix() + mu * identity(n)));
                Eigen::VectorXd inv_root = w.values.cwiseMax(std::numeric_limits<double>::min()).cwiseSqrt().cwiseInverse();
                ComplexMatrix Winv = w.vectors * inv_root.asDiagonal() * w.vectors.adjoint();
                Spectrum t = eigen_decompose(HermitianMatrix::symmetrize(Winv * GtG * Winv));
                Eigen::VectorXd d(n);
                for (Index i = 0; i < n; ++i)
                    d(i) = t.values(i) > 0.0 ? std::max(scale - 1.0 / t.values(i), 0.0) : 0.0;
                ComplexMatrix Kw = t.vectors * d.asDiagonal() * t.vectors.adjoint();
                ComplexMatrix X = Winv * Kw * Winv;
                return ComplexMatrix(0.5 * (X + X.adjoint()));
            };
            auto trace = [](const ComplexMatrix &X) { return X.trace().real(); };

            const double lin_min = min_eigenvalue(lin);
            if (lin_min > 1e-12 * std::max(1.0, spectral_norm(lin)))
            {
                ComplexMatrix X = solve(0.0);
                if (trace(X) <= budget)
                    return X;
            }
            double hi = 1.0;
            while (trace(solve(hi)) > budget)
                hi *= 2.0;
            double lo = 0.0;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it)
            {
                const double mid = 0.5 * (lo + hi);
                if (trace(solve(mid)) > budget)
                    lo = mid;
                else
                    hi = mid;
            }
            return solve(hi);
        }

        AscentResult dc_ascent(const RateModel &model, const FeasibleSet &set, const HermitianMatrix &start,
                               const SolverConfig &cfg, double tol)
        {
            AscentResult res;
            HermitianMatrix X = set.project(start.matrix());
            double f = model.value(X.matrix());
            res.trace.push_back({0, f});
            StopRule rule(tol);

            for (std::size_t it = 1; it <= cfg.max_iters; ++it)
            {
                // Linearise the concave -log det(I + eve X eve^H) term at X.
                const HermitianMatrix lin = HermitianMatrix::symmetrize(model.scale * output_gradient(model.eve, X.matrix()));
                HermitianMatrix Xn = set.project(water_fill(model.gain, model.scale, lin, set.budget));
                const double fn = model.value(Xn.matrix());
                if (fn < f)
                {
                    // minorisation guarantees ascent; a decrease is round-off at the fixed point
                    res.converged = true;
                    break;
                }
                const double increase = fn - f;
                X = std::move(Xn);
                f = fn;
                res.trace.push_back({it, f});
                if (rule.stop(increase))
                {
                    res.converged = true;
                    break;
                }
            }
            res.point = X;
            res.value = f;
            return res;
        }

        AscentResult ascend(const RateModel &model, const FeasibleSet &set, const HermitianMatrix &start,
                            const SolverConfig &cfg, double tol)
        {
            if (cfg.method == SolverMethod::dc_iteration)
                return dc_ascent(model, set, start, cfg, tol);
            return projected_gradient_ascent(model, set, start, cfg, tol);
        }

        ComplexMatrix random_complex(Index r, Index c, std::mt19937_64 &gen)
        {
            std::normal_distribution<double> normal(0.0, 1.0);
            ComplexMatrix G(r, c);
            for (Index j = 0; j < c; ++j)
                for (Index i = 0; i < r; ++i)
                    G(i, j) = Complex(normal(gen), normal(gen));
            return G;
        }

        HermitianMatrix proper_start(Index nt, double P, const SolverConfig &cfg)
        {
            if (!cfg.random_init)
                return HermitianMatrix::symmetrize(identity(nt) * (P / double(nt)));
            std::mt19937_64 gen(cfg.seed);
            ComplexMatrix G = random_complex(nt, nt, gen);
            ComplexMatrix W = G * G.adjoint();
            return HermitianMatrix::symmetrize(W * (P / W.trace().real()));
        }

        AugmentedCovariance general_start(Index nt, double P, const SolverConfig &cfg)
        {
            if (!cfg.random_init || cfg.proper_only)
                return AugmentedCovariance::proper(proper_start(nt, P, cfg));
            // random real-composite covariance: generically improper
            std::mt19937_64 gen(cfg.seed);
            std::normal_distribution<double> normal(0.0, 1.0);
            RealMatrix G(2 * nt, 2 * nt);
            for (Index j = 0; j < G.cols(); ++j)
                for (Index i = 0; i < G.rows(); ++i)
                    G(i, j) = normal(gen);
            RealMatrix W = G * G.transpose();
            W *= P / W.trace();
            return augmented_from_composite(W);
        }

        ConvergenceTrace finish(AscentResult &&res, AugmentedCovariance point)
        {
            ConvergenceTrace tr;
            tr.iterates = std::move(res.trace);
            tr.terminal_rate = {res.value};
            tr.terminal_point = std::move(point);
            tr.converged = res.converged;
            return tr;
        }
    }

    ConvergenceTrace maximize_proper(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg)
    {
        cfg.validate();
        RateModel model{ch.legitimate(), ch.eavesdropper(), 1.0};
        FeasibleSet set{budget.power(), Structure::plain};
        AscentResult res = ascend(model, set, proper_start(ch.nt(), budget.power(), cfg), cfg, cfg.tol_increase);
        AugmentedCovariance point = AugmentedCovariance::proper(res.point);
        return finish(std::move(res), std::move(point));
    }

    ConvergenceTrace maximize_general(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg)
    {
        cfg.validate();
        RateModel model{augment_channel(ch.legitimate()), augment_channel(ch.eavesdropper()), 0.5};
        FeasibleSet set{budget.augmented(), cfg.proper_only ? Structure::augmented_proper : Structure::augmented};
        AugmentedCovariance start = general_start(ch.nt(), budget.power(), cfg);
        AscentResult res = ascend(model, set, start.augmented(), cfg, cfg.tol_increase);
        AugmentedCovariance point = AugmentedCovariance::from_augmented(res.point);
        return finish(std::move(res), std::move(point));
    }

    // ---------- saddle point ----------

    namespace
    {
        enum class CorrelationStructure
        {
            plain,
            augmented,
            augmented_contracted
        };

        struct SaddleProblem
        {
            ComplexMatrix stacked; // [Hr; He]
            ComplexMatrix eve;
            Index nr, ne;          // dimensions of the correlation matrix
            double scale;
            FeasibleSet inner_set;
            CorrelationStructure structure;
        };

        ComplexMatrix repair_correlation(const ComplexMatrix &A, CorrelationStructure s)
        {
            if (s == CorrelationStructure::plain)
                return A;
            const Index r = A.rows() / 2, c = A.cols() / 2;
            ComplexMatrix a = 0.5 * (A.topLeftCorner(r, c) + A.bottomRightCorner(r, c).conjugate());
            ComplexMatrix b = ComplexMatrix::Zero(r, c);
            if (s == CorrelationStructure::augmented)
                b = 0.5 * (A.topRightCorner(r, c) + A.bottomLeftCorner(r, c).conjugate());
            ComplexMatrix R(2 * r, 2 * c);
            R.topLeftCorner(r, c) = a;
            R.topRightCorner(r, c) = b;
            R.bottomLeftCorner(r, c) = b.conjugate();
            R.bottomRightCorner(r, c) = a.conjugate();
            return R;
        }

        ComplexMatrix project_correlation(const ComplexMatrix &A, CorrelationStructure s)
        {
            const double cap = std::sqrt(1.0 - saddle_boundary_margin);
            Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
            Eigen::VectorXd sv = svd.singularValues().cwiseMin(cap);
            ComplexMatrix S = ComplexMatrix::Zero(A.rows(), A.cols());
            for (Index i = 0; i < sv.size(); ++i)
                S(i, i) = sv(i);
            return repair_correlation(svd.matrixU() * S * svd.matrixV().adjoint(), s);
        }

        struct InnerSolution
        {
            HermitianMatrix K;
            double value;
        };

        InnerSolution solve_inner(const SaddleProblem &p, const ComplexMatrix &A, const HermitianMatrix &warm,
                                  const SolverConfig &cfg)
        {
            const HermitianMatrix Q = noise_covariance(A);
            Eigen::LLT<ComplexMatrix> llt(Q.matrix());
            if (llt.info() != Eigen::Success)
                throw InfeasibleNoiseCorrelation("noise covariance is not positive definite");
            ComplexMatrix whitened = llt.matrixL().solve(p.stacked);
            RateModel model{std::move(whitened), p.eve, p.scale};
            AscentResult r = ascend(model, p.inner_set, warm, cfg, cfg.tol_increase / 10.0);
            return {r.point, r.value};
        }

        ComplexMatrix correlation_gradient(const SaddleProblem &p, const ComplexMatrix &A, const HermitianMatrix &K)
        {
            const HermitianMatrix Q = noise_covariance(A);
            const Index n = Q.dim();
            ComplexMatrix M = Q.matrix() + p.stacked * K.matrix() * p.stacked.adjoint();
            ComplexMatrix Minv = M.llt().solve(identity(n));
            ComplexMatrix Qinv = Q.matrix().llt().solve(identity(n));
            return 2.0 * p.scale * (Minv.topRightCorner(p.nr, p.ne) - Qinv.topRightCorner(p.nr, p.ne));
        }

        SaddleResult run_saddle(const SaddleProblem &p, const HermitianMatrix &K0, const SolverConfig &cfg)
        {
            cfg.validate();
            SaddleResult out;
            ComplexMatrix A = ComplexMatrix::Zero(p.nr, p.ne);
            InnerSolution cur = solve_inner(p, A, K0, cfg);
            out.outer_values.push_back(cur.value);
            const double dir_scale = 1.0 / p.scale;
            double t = cfg.step_init;
            ComplexMatrix Aprev, Dprev;
            StopRule rule(cfg.tol_increase);

            for (std::size_t it = 1; it <= cfg.max_iters; ++it)
            {
                const ComplexMatrix G = correlation_gradient(p, A, cur.K);
                const ComplexMatrix D = repair_correlation(dir_scale * G, p.structure);
                if (it > 1)
                {
                    // Barzilai-Borwein (short) step, as in the ascent engine
                    const ComplexMatrix S = A - Aprev;
                    const ComplexMatrix Y = D - Dprev;
                    const double sy = inner(S, Y), yy = inner(Y, Y);
                    if (sy > 0.0 && yy > 0.0)
                        t = std::clamp(sy / yy, 1e-10, 1e10);
                }
                Aprev = A;
                Dprev = D;

                ComplexMatrix An;
                InnerSolution next{cur.K, cur.value};
                auto trial = [&](double step)
                {
                    An = project_correlation(A - step * D, p.structure);
                    next = solve_inner(p, An, cur.K, cfg);
                    return next.value <= cur.value - cfg.armijo_c * inner(G, A - An);
                };

                bool accepted = false, first = true, first_accepted = false;
                while (t >= 1e-14)
                {
                    if (trial(t))
                    {
                        accepted = true;
                        first_accepted = first;
                        break;
                    }
                    first = false;
                    t *= cfg.armijo_shrink;
                }
                if (!accepted)
                {
                    out.converged = true;
                    break;
                }
                // Try longer, then shorter steps while they lower the value
                // (the objective is convex in A, so this brackets the minimum).
                auto refine = [&](double factor)
                {
                    bool moved = false;
                    for (int k = 0; k < 50; ++k)
                    {
                        const ComplexMatrix Akeep = An;
                        const InnerSolution keep = next;
                        if (!trial(factor * t) || !(next.value < keep.value))
                        {
                            An = Akeep;
                            next = keep;
                            break;
                        }
                        t *= factor;
                        moved = true;
                    }
                    return moved;
                };
                if (first_accepted && !refine(2.0))
                    refine(0.5);

                const double decrease = cur.value - next.value;
                A = An;
                cur = next;
                out.outer_values.push_back(cur.value);
                t = std::min(2.0 * t, 1e6);
                if (rule.stop(decrease))
                {
                    out.converged = true;
                    break;
                }
            }
            out.correlation = A;
            out.covariance = cur.K;
            out.value = {cur.value};
            return out;
        }
    }

    SaddleResult saddle_solve(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg)
    {
        ComplexMatrix H(ch.nr() + ch.ne(), ch.nt());
        H << ch.legitimate(), ch.eavesdropper();
        SaddleProblem p{H, ch.eavesdropper(), ch.nr(), ch.ne(), 1.0, FeasibleSet{budget.power(), Structure::plain},
                        CorrelationStructure::plain};
        return run_saddle(p, proper_start(ch.nt(), budget.power(), SolverConfig{}), cfg);
    }

    SaddleResult saddle_solve_general(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg,
                                      bool contracted)
    {
        const ComplexMatrix Hr = augment_channel(ch.legitimate());
        const ComplexMatrix He = augment_channel(ch.eavesdropper());
        ComplexMatrix H(Hr.rows() + He.rows(), Hr.cols());
        H << Hr, He;
        SaddleProblem p{H, He, Hr.rows(), He.rows(), 0.5, FeasibleSet{budget.augmented(), Structure::augmented},
                        contracted ? CorrelationStructure::augmented_contracted : CorrelationStructure::augmented};
        AugmentedCovariance start = AugmentedCovariance::proper(proper_start(ch.nt(), budget.power(), SolverConfig{}));
        return run_saddle(p, start.augmented(), cfg);
    }
}
