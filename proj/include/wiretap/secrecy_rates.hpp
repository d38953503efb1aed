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

#ifndef WIRETAP_SECRECY_RATES_HPP
#define WIRETAP_SECRECY_RATES_HPP

#include <string_view>

#include "wiretap/augmented_signal.hpp"
#include "wiretap/matrix_core.hpp"

namespace wiretap
{
    enum class RateUnit
    {
        nats,
        bits
    };

    std::string_view to_string(RateUnit u);
    RateUnit parse_rate_unit(std::string_view s);

    // Rates are held in nats; conversion happens only when a value is reported.
    struct RateValue
    {
        double nats = 0.0;

        double in(RateUnit u) const;
    };

    // ---------- rate functionals ----------

    /// log det(I + Hr K Hr^H) - log det(I + He K He^H).
    RateValue proper_rate(const ChannelPair &ch, const HermitianMatrix &K);

    /// Half-difference of the augmented log-dets; equals proper_rate when Kt = 0.
    RateValue general_rate(const ChannelPair &ch, const AugmentedCovariance &aug);

    /// Same quantity through the real-composite channel and covariance:
    /// (1/2)[log det(I + Hr' Kbar Hr'^T) - log det(I + He' Kbar He'^T)].
    RateValue real_composite_rate(const ChannelPair &ch, const AugmentedCovariance &aug);

    // ---------- degradedness ----------

    struct DegradednessReport
    {
        HermitianMatrix delta; // Hr^H Hr - He^H He
        double min_eig = 0.0;
        double max_eig = 0.0;
        bool is_degraded = false;

        /// blockdiag(delta, conj(delta)).
        HermitianMatrix augmented_delta() const;
    };

    DegradednessReport degradedness(const ChannelPair &ch);

    // ---------- determinant inequality ----------

    struct InequalityReport
    {
        double lhs = 0.0;       // det(K) / det(K(S2+S4))
        double rhs = 0.0;       // det(K(S1+S2))/det(K(S2)) * det(K(S3+S4))/det(K(S4))
        double log_lhs = 0.0;
        double log_rhs = 0.0;
        double equality_gap = 0.0; // log_rhs - log_lhs, >= 0 when the inequality holds
        bool holds = false;        // lhs <= rhs + 1e-9 max(1, |rhs|)
        double cross_block_norm = 0.0; // ||K(S1+S2, S3+S4)||_F
    };

    /// Four-block generalisation of Fischer's inequality for a PD matrix.
    InequalityReport fischer_like(const HermitianMatrix &K, const PartitionSpec &part);

    /// Differential entropy (nats) of a proper complex Gaussian vector with
    /// covariance K: log((pi e)^n det K).
    double gaussian_entropy(const HermitianMatrix &K);

    /// h(X1|X2) + h(X3|X4) - h(X1,X3|X2,X4) for X ~ CN(0, K) split by `part`.
    double conditional_entropy_gap(const HermitianMatrix &K, const PartitionSpec &part);

    // ---------- pointwise dominance on degraded channels ----------

    struct DominanceChain
    {
        double general_rate = 0.0;   // R_g(K, Kt)
        double block_form = 0.0;     // (1/2)[log det T - log det T(S2+S4)], equal to general_rate
        double fischer_bound = 0.0;  // upper bound from fischer_like on T
        double proper_rate = 0.0;    // R_p(K), equal to fischer_bound
        InequalityReport lemma;      // the inequality applied to T
    };

    /// Evaluates each stage of the argument that R_g(K, Kt) <= R_p(K) on a
    /// degraded channel: T = I + D X D^H with D = blockdiag(Delta^1/2, He,
    /// conj(Delta^1/2), conj(He)) and X the permuted 4x4 block pattern of
    /// the augmented covariance. Throws NotDegraded.
    DominanceChain degraded_dominance_chain(const ChannelPair &ch, const AugmentedCovariance &aug);

    struct DominanceResult
    {
        RateValue general;
        RateValue proper_same_K;
    };

    DominanceResult degraded_dominance(const ChannelPair &ch, const AugmentedCovariance &aug);

    // ---------- noise correlation and min-max objective ----------

    /// Smallest admissible eigenvalue of I - A A^H.
    inline constexpr double noise_boundary_margin = 1e-8;

    // Cross-covariance A = E{Nr Ne^H} and pseudo cross-covariance
    // B = E{Nr Ne^T}; instances always satisfy I - Aaug Aaug^H > 0.
    class NoiseCorrelation
    {
    public:
        NoiseCorrelation(ComplexMatrix A, ComplexMatrix B);
        /// B = 0.
        explicit NoiseCorrelation(ComplexMatrix A);
        static NoiseCorrelation independent(Index nr, Index ne);

        const ComplexMatrix &cross() const noexcept { return A_; }
        const ComplexMatrix &pseudo_cross() const noexcept { return B_; }
        Index nr() const noexcept { return A_.rows(); }
        Index ne() const noexcept { return A_.cols(); }

        /// [[A, B], [conj(B), conj(A)]].
        ComplexMatrix augmented() const;

    private:
        ComplexMatrix A_, B_;
    };

    /// [[I, A], [A^H, I]].
    HermitianMatrix noise_covariance(const ComplexMatrix &A);

    struct UdlFactors
    {
        ComplexMatrix upper;    // [[I, A], [0, I]]
        ComplexMatrix diagonal; // [[I - A A^H, 0], [0, I]]
        ComplexMatrix lower;    // [[I, 0], [A^H, I]]
    };

    UdlFactors udl_factors(const ComplexMatrix &A);

    /// [[I, A], [A^H, I]]^{-1} assembled from the inverted UDL factors.
    /// Throws InfeasibleNoiseCorrelation unless I - A A^H > noise_boundary_margin.
    ComplexMatrix udl_inverse(const ComplexMatrix &A);
    ComplexMatrix udl_inverse(const NoiseCorrelation &nc);

    /// (Hr^H - He^H A^H)(I - A A^H)^{-1}(Hr - A He) on the augmented channel
    /// and augmented correlation. Block diagonal when B = 0.
    HermitianMatrix effective_legitimate_gain(const ChannelPair &ch, const NoiseCorrelation &nc);

    /// (1/2)[log det(I + (G + He_aug^H He_aug) Kaug) - log det(I + He_aug Kaug He_aug^H)]
    /// with G = effective_legitimate_gain.
    RateValue minmax_objective(const ChannelPair &ch, const NoiseCorrelation &nc, const AugmentedCovariance &aug);

    /// log det(I + Q^{-1} H K H^H) - log det(I + He K He^H), H = [Hr; He],
    /// Q = [[I, A], [A^H, I]].
    RateValue proper_minmax_objective(const ChannelPair &ch, const ComplexMatrix &A, const HermitianMatrix &K);
}

#endif
