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

#include "wiretap/secrecy_rates.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wiretap
{
    std::string_view to_string(RateUnit u)
    {
        return u == RateUnit::bits ? "bits" : "nats";
    }

    RateUnit parse_rate_unit(std::string_view s)
    {
        if (s == "nats")
            return RateUnit::nats;
        if (s == "bits")
            return RateUnit::bits;
        throw ConfigError("unknown rate unit '" + std::string(s) + "' (expected nats or bits)");
    }

    double RateValue::in(RateUnit u) const
    {
        return u == RateUnit::bits ? nats / std::numbers::ln2 : nats;
    }

    namespace
    {
        // log det(I + H K H^H)
        double logdet_output(const ComplexMatrix &H, const ComplexMatrix &K)
        {
            ComplexMatrix M = ComplexMatrix::Identity(H.rows(), H.rows()) + H * K * H.adjoint();
            return logdet_pd(HermitianMatrix::symmetrize(M));
        }

        void require_psd_input(const HermitianMatrix &K, Index nt)
        {
            if (K.dim() != nt)
                throw DimensionError("covariance dimension must equal n_t");
            if (!is_psd(K))
                throw NotPositiveSemidefinite("transmit covariance is not positive semidefinite");
        }

        void require_noise_feasible(const ComplexMatrix &A)
        {
            const Index nr = A.rows();
            ComplexMatrix S = ComplexMatrix::Identity(nr, nr) - A * A.adjoint();
            if (nr > 0 && min_eigenvalue(HermitianMatrix::symmetrize(S)) < noise_boundary_margin)
                throw InfeasibleNoiseCorrelation("noise correlation violates I - A A^H > 0");
        }
    }

    RateValue proper_rate(const ChannelPair &ch, const HermitianMatrix &K)
    {
        require_psd_input(K, ch.nt());
        return {logdet_output(ch.legitimate(), K.matrix()) - logdet_output(ch.eavesdropper(), K.matrix())};
    }

    RateValue general_rate(const ChannelPair &ch, const AugmentedCovariance &aug)
    {
        if (aug.dim() != ch.nt())
            throw DimensionError("covariance dimension must equal n_t");
        const ComplexMatrix Ka = aug.augmented().matrix();
        const double r = logdet_output(augment_channel(ch.legitimate()), Ka);
        const double e = logdet_output(augment_channel(ch.eavesdropper()), Ka);
        return {0.5 * (r - e)};
    }

    RateValue real_composite_rate(const ChannelPair &ch, const AugmentedCovariance &aug)
    {
        if (aug.dim() != ch.nt())
            throw DimensionError("covariance dimension must equal n_t");
        const RealCompositeChannel rc = to_real_composite(ch);
        const ComplexMatrix Kbar = composite_covariance(aug).cast<Complex>();
        const double r = logdet_output(rc.legitimate.cast<Complex>(), Kbar);
        const double e = logdet_output(rc.eavesdropper.cast<Complex>(), Kbar);
        return {0.5 * (r - e)};
    }

    // ---------- degradedness ----------

    HermitianMatrix DegradednessReport::augmented_delta() const
    {
        return HermitianMatrix::symmetrize(block_diag(delta.matrix(), delta.matrix().conjugate()));
    }

    DegradednessReport degradedness(const ChannelPair &ch)
    {
        const ComplexMatrix &Hr = ch.legitimate();
        const ComplexMatrix &He = ch.eavesdropper();
        DegradednessReport rep;
        rep.delta = HermitianMatrix::symmetrize(Hr.adjoint() * Hr - He.adjoint() * He);
        Spectrum s = eigen_decompose(rep.delta);
        rep.min_eig = s.values.minCoeff();
        rep.max_eig = s.values.maxCoeff();
        rep.is_degraded = rep.min_eig > psd_tolerance(rep.delta);
        return rep;
    }

    // ---------- determinant inequality ----------

    InequalityReport fischer_like(const HermitianMatrix &K, const PartitionSpec &part)
    {
        if (K.dim() != part.size())
            throw PartitionError("partition size does not match the matrix dimension");
        if (!is_pd(K))
            throw NotPositiveDefinite("fischer_like: matrix is not positive definite");

        auto ld = [&](std::initializer_list<int> bs)
        {
            auto idx = part.blocks(bs);
            return logdet_pd(principal_submatrix(K, idx));
        };

        InequalityReport rep;
        rep.log_lhs = logdet_pd(K) - ld({2, 4});
        rep.log_rhs = (ld({1, 2}) - ld({2})) + (ld({3, 4}) - ld({4}));
        rep.lhs = std::exp(rep.log_lhs);
        rep.rhs = std::exp(rep.log_rhs);
        rep.equality_gap = rep.log_rhs - rep.log_lhs;
        rep.holds = rep.lhs <= rep.rhs + 1e-9 * std::max(1.0, std::abs(rep.rhs));
        rep.cross_block_norm = submatrix(K.matrix(), part.blocks({1, 2}), part.blocks({3, 4})).norm();
        return rep;
    }

    double gaussian_entropy(const HermitianMatrix &K)
    {
        if (K.dim() == 0)
            return 0.0;
        Spectrum s = eigen_decompose(K);
        if (s.values.minCoeff() <= 0.0)
            throw NotPositiveDefinite("entropy of a singular Gaussian is unbounded below");
        double h = double(K.dim()) * std::log(std::numbers::pi * std::numbers::e);
        for (Index i = 0; i < s.values.size(); ++i)
            h += std::log(s.values(i));
        return h;
    }

    double conditional_entropy_gap(const HermitianMatrix &K, const PartitionSpec &part)
    {
        if (K.dim() != part.size())
            throw PartitionError("partition size does not match the matrix dimension");
        auto h = [&](std::initializer_list<int> bs)
        { return gaussian_entropy(principal_submatrix(K, part.blocks(bs))); };

        const double h1_given_2 = h({1, 2}) - h({2});
        const double h3_given_4 = h({3, 4}) - h({4});
        const double h13_given_24 = h({1, 2, 3, 4}) - h({2, 4});
        return h1_given_2 + h3_given_4 - h13_given_24;
    }

    // ---------- dominance ----------

    DominanceChain degraded_dominance_chain(const ChannelPair &ch, const AugmentedCovariance &aug)
    {
        if (aug.dim() != ch.nt())
            throw DimensionError("covariance dimension must equal n_t");
        DegradednessReport deg = degradedness(ch);
        if (!deg.is_degraded)
            throw NotDegraded("channel is not degraded (H_r^H H_r - H_e^H H_e is not positive definite)");

        const Index nt = ch.nt(), ne = ch.ne();
        const ComplexMatrix root = sqrt_psd(deg.delta).matrix();
        const ComplexMatrix &He = ch.eavesdropper();
        const ComplexMatrix &K = aug.covariance().matrix();
        const ComplexMatrix &Kt = aug.pseudo_covariance();

        // D = blockdiag(root, He, conj(root), conj(He)), (2nt+2ne) x 4nt
        ComplexMatrix D = ComplexMatrix::Zero(2 * (nt + ne), 4 * nt);
        D.block(0, 0, nt, nt) = root;
        D.block(nt, nt, ne, nt) = He;
        D.block(nt + ne, 2 * nt, nt, nt) = root.conjugate();
        D.block(2 * nt + ne, 3 * nt, ne, nt) = He.conjugate();

        // X = [[K K Kt Kt]; [K K Kt Kt]; [Kt* Kt* K* K*]; [Kt* Kt* K* K*]]
        ComplexMatrix X(4 * nt, 4 * nt);
        for (int bi = 0; bi < 4; ++bi)
            for (int bj = 0; bj < 4; ++bj)
            {
                const bool top = bi < 2, left = bj < 2;
                ComplexMatrix blk = top ? (left ? K : Kt) : (left ? ComplexMatrix(Kt.conjugate()) : ComplexMatrix(K.conjugate()));
                X.block(bi * nt, bj * nt, nt, nt) = blk;
            }

        const Index k = 2 * (nt + ne);
        HermitianMatrix T = HermitianMatrix::symmetrize(ComplexMatrix::Identity(k, k) + D * X * D.adjoint());
        PartitionSpec part(nt, nt + ne, 2 * nt + ne, k);

        DominanceChain chain;
        chain.general_rate = general_rate(ch, aug).nats;
        chain.lemma = fischer_like(T, part);
        chain.block_form = 0.5 * chain.lemma.log_lhs;
        chain.fischer_bound = 0.5 * chain.lemma.log_rhs;
        chain.proper_rate = proper_rate(ch, aug.covariance()).nats;
        return chain;
    }

    DominanceResult degraded_dominance(const ChannelPair &ch, const AugmentedCovariance &aug)
    {
        if (!degradedness(ch).is_degraded)
            throw NotDegraded("channel is not degraded (H_r^H H_r - H_e^H H_e is not positive definite)");
        return {general_rate(ch, aug), proper_rate(ch, aug.covariance())};
    }

    // ---------- noise correlation ----------

    NoiseCorrelation::NoiseCorrelation(ComplexMatrix A, ComplexMatrix B) : A_(std::move(A)), B_(std::move(B))
    {
        if (A_.rows() != B_.rows() || A_.cols() != B_.cols())
            throw DimensionError("A and B must have the same shape");
        require_finite(A_, "A");
        require_finite(B_, "B");
        require_noise_feasible(augmented());
    }

    NoiseCorrelation::NoiseCorrelation(ComplexMatrix A)
        : NoiseCorrelation(A, ComplexMatrix::Zero(A.rows(), A.cols()))
    {
    }

    NoiseCorrelation NoiseCorrelation::independent(Index nr, Index ne)
    {
        return NoiseCorrelation(ComplexMatrix::Zero(nr, ne));
    }

    ComplexMatrix NoiseCorrelation::augmented() const
    {
        const Index r = A_.rows(), c = A_.cols();
        ComplexMatrix M(2 * r, 2 * c);
        M.topLeftCorner(r, c) = A_;
        M.topRightCorner(r, c) = B_;
        M.bottomLeftCorner(r, c) = B_.conjugate();
        M.bottomRightCorner(r, c) = A_.conjugate();
        return M;
    }

    HermitianMatrix noise_covariance(const ComplexMatrix &A)
    {
        const Index r = A.rows(), c = A.cols();
        ComplexMatrix Q = ComplexMatrix::Identity(r + c, r + c);
        Q.topRightCorner(r, c) = A;
        Q.bottomLeftCorner(c, r) = A.adjoint();
        return HermitianMatrix(std::move(Q));
    }

    UdlFactors udl_factors(const ComplexMatrix &A)
    {
        const Index r = A.rows(), c = A.cols();
        UdlFactors f;
        f.upper = ComplexMatrix::Identity(r + c, r + c);
        f.upper.topRightCorner(r, c) = A;
        f.diagonal = ComplexMatrix::Identity(r + c, r + c);
        f.diagonal.topLeftCorner(r, r) -= A * A.adjoint();
        f.lower = ComplexMatrix::Identity(r + c, r + c);
        f.lower.bottomLeftCorner(c, r) = A.adjoint();
        return f;
    }

    ComplexMatrix udl_inverse(const ComplexMatrix &A)
    {
        require_finite(A, "A");
        require_noise_feasible(A);
        const Index r = A.rows(), c = A.cols();
        // Q^{-1} = L^{-1} D^{-1} U^{-1}; the unit-triangular factors invert by
        // negating their off-diagonal block.
        ComplexMatrix Linv = ComplexMatrix::Identity(r + c, r + c);
        Linv.bottomLeftCorner(c, r) = -A.adjoint();
        ComplexMatrix Uinv = ComplexMatrix::Identity(r + c, r + c);
        Uinv.topRightCorner(r, c) = -A;
        ComplexMatrix Dinv = ComplexMatrix::Identity(r + c, r + c);
        ComplexMatrix S = ComplexMatrix::Identity(r, r) - A * A.adjoint();
        Dinv.topLeftCorner(r, r) = S.llt().solve(ComplexMatrix::Identity(r, r));
        return Linv * Dinv * Uinv;
    }

    ComplexMatrix udl_inverse(const NoiseCorrelation &nc)
    {
        return udl_inverse(nc.augmented());
    }

    HermitianMatrix effective_legitimate_gain(const ChannelPair &ch, const NoiseCorrelation &nc)
    {
        if (nc.nr() != ch.nr() || nc.ne() != ch.ne())
            throw DimensionError("noise correlation must be n_r x n_e");
        const ComplexMatrix Hr = augment_channel(ch.legitimate());
        const ComplexMatrix He = augment_channel(ch.eavesdropper());
        const ComplexMatrix A = nc.augmented();
        const Index r = A.rows();
        ComplexMatrix S = ComplexMatrix::Identity(r, r) - A * A.adjoint();
        ComplexMatrix W = Hr - A * He;
        return HermitianMatrix::symmetrize(W.adjoint() * S.llt().solve(W));
    }

    RateValue minmax_objective(const ChannelPair &ch, const NoiseCorrelation &nc, const AugmentedCovariance &aug)
    {
        if (aug.dim() != ch.nt())
            throw DimensionError("covariance dimension must equal n_t");
        const ComplexMatrix He = augment_channel(ch.eavesdropper());
        HermitianMatrix G = effective_legitimate_gain(ch, nc) + HermitianMatrix::symmetrize(He.adjoint() * He);
        const HermitianMatrix Ka = aug.augmented();
        const double joint = logdet_identity_plus(G, Ka);
        const double eve = logdet_output(He, Ka.matrix());
        return {0.5 * (joint - eve)};
    }

    RateValue proper_minmax_objective(const ChannelPair &ch, const ComplexMatrix &A, const HermitianMatrix &K)
    {
        if (A.rows() != ch.nr() || A.cols() != ch.ne())
            throw DimensionError("noise correlation must be n_r x n_e");
        require_finite(A, "A");
        require_noise_feasible(A);
        require_psd_input(K, ch.nt());
        ComplexMatrix H(ch.nr() + ch.ne(), ch.nt());
        H << ch.legitimate(), ch.eavesdropper();
        const HermitianMatrix Q = noise_covariance(A);
        const double joint = logdet_pd(HermitianMatrix::symmetrize(Q.matrix() + H * K.matrix() * H.adjoint())) - logdet_pd(Q);
        return {joint - logdet_output(ch.eavesdropper(), K.matrix())};
    }
}
