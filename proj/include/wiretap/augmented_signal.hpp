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

#ifndef WIRETAP_AUGMENTED_SIGNAL_HPP
#define WIRETAP_AUGMENTED_SIGNAL_HPP

#include <cstddef>
#include <cstdint>

#include "wiretap/matrix_core.hpp"

namespace wiretap
{
    /// [[K, Kt], [conj(Kt), conj(K)]]
    ComplexMatrix assemble_augmented(const ComplexMatrix &K, const ComplexMatrix &Kt);

    // Complete second-order description of a zero-mean complex vector:
    // covariance K = E{xx^H} and pseudo-covariance Kt = E{xx^T}. Instances
    // are always feasible (symmetric Kt, PSD augmented matrix).
    class AugmentedCovariance
    {
    public:
        /// Zero-dimensional signal.
        AugmentedCovariance() = default;

        /// Proper signal with covariance K (throws if K is not PSD).
        static AugmentedCovariance proper(const HermitianMatrix &K);

        /// Splits a 2n x 2n Hermitian PSD matrix into (K, Kt). The conjugate
        /// block pattern is enforced by averaging (1,1) with conj(2,2) and
        /// (1,2) with conj(2,1).
        static AugmentedCovariance from_augmented(const HermitianMatrix &Kaug);

        const HermitianMatrix &covariance() const noexcept { return K_; }
        const ComplexMatrix &pseudo_covariance() const noexcept { return Kt_; }
        Index dim() const noexcept { return K_.dim(); }
        bool is_proper() const { return Kt_.cwiseAbs().maxCoeff() == 0.0; }

        HermitianMatrix augmented() const;

    private:
        friend AugmentedCovariance validate_augmented(const HermitianMatrix &, const ComplexMatrix &);
        AugmentedCovariance(HermitianMatrix K, ComplexMatrix Kt) : K_(std::move(K)), Kt_(std::move(Kt)) {}
        HermitianMatrix K_;
        ComplexMatrix Kt_;
    };

    /// Throws NotSymmetric if Kt != Kt^T (1e-12), InfeasibleSecondOrder if the
    /// augmented matrix is not PSD.
    AugmentedCovariance validate_augmented(const HermitianMatrix &K, const ComplexMatrix &Kt);

    // Legitimate channel Hr (nr x nt) and eavesdropper channel He (ne x nt),
    // both receivers with unit-covariance proper Gaussian noise.
    class ChannelPair
    {
    public:
        ChannelPair(ComplexMatrix Hr, ComplexMatrix He);

        const ComplexMatrix &legitimate() const noexcept { return Hr_; }
        const ComplexMatrix &eavesdropper() const noexcept { return He_; }
        Index nt() const noexcept { return Hr_.cols(); }
        Index nr() const noexcept { return Hr_.rows(); }
        Index ne() const noexcept { return He_.rows(); }

    private:
        ComplexMatrix Hr_, He_;
    };

    /// blockdiag(H, conj(H)).
    ComplexMatrix augment_channel(const ComplexMatrix &H);

    /// M_n = [[I, iI], [I, -iI]], with M M^H = M^H M = 2I.
    ComplexMatrix widely_linear_transform(Index n);

    /// sqrt(2) * [[Re H, -Im H], [Im H, Re H]].
    RealMatrix real_composite(const ComplexMatrix &H);

    struct RealCompositeChannel
    {
        RealMatrix legitimate;   // 2nr x 2nt
        RealMatrix eavesdropper; // 2ne x 2nt
    };

    RealCompositeChannel to_real_composite(const ChannelPair &ch);

    /// Covariance of (Re x, Im x): (1/4) M^H Kaug M.
    RealMatrix composite_covariance(const AugmentedCovariance &aug);

    /// Inverse of composite_covariance: Kaug = M Kbar M^H.
    AugmentedCovariance augmented_from_composite(const RealMatrix &Kbar);

    struct SampleBatch
    {
        Index n = 0;
        ComplexMatrix samples; // n x count, one draw per column

        std::size_t count() const noexcept { return std::size_t(samples.cols()); }
    };

    /// Zero-mean complex Gaussian draws with population covariance K and
    /// pseudo-covariance Kt. The real-composite covariance is factored by its
    /// symmetric PSD square root, so rank-deficient (maximally improper)
    /// covariances are sampleable. Uses std::mt19937_64 seeded with `seed`
    /// and std::normal_distribution; draws are reproducible on one standard
    /// library implementation.
    SampleBatch sample_gaussian(const AugmentedCovariance &aug, std::size_t count, std::uint64_t seed);

    struct SecondMoments
    {
        HermitianMatrix covariance;
        ComplexMatrix pseudo_covariance;
    };

    /// (1/count) sum x x^H and (1/count) sum x x^T. Throws CountError for
    /// fewer than two samples.
    SecondMoments estimate_augmented(const SampleBatch &batch);
}

#endif
