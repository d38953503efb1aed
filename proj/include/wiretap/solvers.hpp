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

#ifndef WIRETAP_SOLVERS_HPP
#define WIRETAP_SOLVERS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wiretap/augmented_signal.hpp"
#include "wiretap/secrecy_rates.hpp"

namespace wiretap
{
    enum class SolverMethod
    {
        projected_gradient,
        dc_iteration
    };

    std::string_view to_string(SolverMethod m);
    SolverMethod parse_solver_method(std::string_view s);

    struct SolverConfig
    {
        std::size_t max_iters = 5000;
        double tol_increase = 1e-5;   // stop once an iteration gains less than this (nats)
        double step_init = 1.0;
        SolverMethod method = SolverMethod::projected_gradient;
        std::uint64_t seed = 0;
        bool random_init = false;     // random start (improper for maximize_general) instead of white
        bool proper_only = false;     // maximize_general: keep the pseudo-covariance at zero
        double armijo_c = 1e-4;
        double armijo_shrink = 0.5;

        void validate() const;
    };

    // Sum transmit power P. The augmented covariance carries twice the trace.
    class PowerBudget
    {
    public:
        explicit PowerBudget(double P);
        /// SNR = 10 lg(P / 2).
        static PowerBudget from_snr_db(double snr_db);

        double power() const noexcept { return P_; }
        double augmented() const noexcept { return 2.0 * P_; }
        double snr_db() const;

    private:
        double P_;
    };

    struct TracePoint
    {
        std::size_t iteration;
        double objective; // nats
    };

    struct ConvergenceTrace
    {
        std::vector<TracePoint> iterates; // iteration 0 is the starting point
        RateValue terminal_rate;
        AugmentedCovariance terminal_point;
        bool converged = false;

        std::size_t iterations() const { return iterates.empty() ? 0 : iterates.size() - 1; }
    };

    /// Euclidean gradient of the proper rate with respect to K:
    /// Hr^H (I + Hr K Hr^H)^{-1} Hr - He^H (I + He K He^H)^{-1} He.
    HermitianMatrix rate_gradient_proper(const ChannelPair &ch, const HermitianMatrix &K);

    /// Gradient of the general rate with respect to the augmented covariance
    /// (entries treated as independent): (1/2)[Hr_aug^H (...)^{-1} Hr_aug - He_aug^H (...)^{-1} He_aug].
    /// d R_g = Re tr(G dKaug) along any structured perturbation dKaug.
    HermitianMatrix rate_gradient_general(const ChannelPair &ch, const AugmentedCovariance &aug);

    /// Frobenius-nearest PSD matrix with trace <= budget (eigenvalue clipping,
    /// then a uniform downward shift found by bisection when the trace is too large).
    HermitianMatrix project_psd_trace(const HermitianMatrix &X, double budget);
    HermitianMatrix project_to_budget(const HermitianMatrix &K, const PowerBudget &budget);

    /// Maximises the proper rate over {K >= 0, tr K <= P}.
    ConvergenceTrace maximize_proper(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg);

    /// Maximises the general rate jointly over (K, Kt) with the augmented
    /// matrix PSD and of trace <= 2P.
    ConvergenceTrace maximize_general(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg);

    struct SaddleResult
    {
        ComplexMatrix correlation;  // A* (or the augmented correlation for saddle_solve_general)
        HermitianMatrix covariance; // K* (or the augmented covariance)
        RateValue value;
        bool converged = false;
        std::vector<double> outer_values; // min-phase value after each accepted outer step
    };

    /// Largest singular value allowed for a noise correlation iterate, so that
    /// I - A A^H >= 1e-6 I.
    inline constexpr double saddle_boundary_margin = 1e-6;

    /// Alternates an inner maximisation over K (at fixed noise correlation A)
    /// with projected-gradient descent over A for
    /// min_A max_K log det(I + Q^{-1} H K H^H) - log det(I + He K He^H).
    SaddleResult saddle_solve(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg);

    /// The same alternation on the augmented problem: the outer variable is the
    /// augmented correlation [[A, B], [B*, A*]] and the inner variable is the
    /// augmented covariance. With `contracted` the pseudo cross-correlation B
    /// is held at zero.
    SaddleResult saddle_solve_general(const ChannelPair &ch, const PowerBudget &budget, const SolverConfig &cfg,
                                      bool contracted);
}

#endif
