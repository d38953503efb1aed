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

#include "wiretap/augmented_signal.hpp"

#include <cmath>
#include <random>

namespace wiretap
{
    ComplexMatrix assemble_augmented(const ComplexMatrix &K, const ComplexMatrix &Kt)
    {
        if (K.rows() != K.cols() || Kt.rows() != K.rows() || Kt.cols() != K.cols())
            throw DimensionError("augmented covariance blocks must be square and of equal size");
        const Index n = K.rows();
        ComplexMatrix A(2 * n, 2 * n);
        A.topLeftCorner(n, n) = K;
        A.topRightCorner(n, n) = Kt;
        A.bottomLeftCorner(n, n) = Kt.conjugate();
        A.bottomRightCorner(n, n) = K.conjugate();
        return A;
    }

    AugmentedCovariance validate_augmented(const HermitianMatrix &K, const ComplexMatrix &Kt)
    {
        if (Kt.rows() != K.dim() || Kt.cols() != K.dim())
            throw DimensionError("pseudo-covariance must match the covariance dimension");
        require_finite(Kt, "pseudo-covariance");
        if (K.dim() > 0 && (Kt - Kt.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw NotSymmetric("pseudo-covariance is not symmetric");
        HermitianMatrix aug = HermitianMatrix::symmetrize(assemble_augmented(K.matrix(), Kt));
        if (!is_psd(aug))
            throw InfeasibleSecondOrder("augmented covariance is not positive semidefinite");
        return AugmentedCovariance(K, Kt);
    }

    AugmentedCovariance AugmentedCovariance::proper(const HermitianMatrix &K)
    {
        return validate_augmented(K, ComplexMatrix::Zero(K.dim(), K.dim()));
    }

    AugmentedCovariance AugmentedCovariance::from_augmented(const HermitianMatrix &Kaug)
    {
        if (Kaug.dim() % 2 != 0)
            throw DimensionError("augmented matrix must have even dimension");
        const Index n = Kaug.dim() / 2;
        const ComplexMatrix &A = Kaug.matrix();
        ComplexMatrix K = 0.5 * (A.topLeftCorner(n, n) + A.bottomRightCorner(n, n).conjugate());
        ComplexMatrix Kt = 0.5 * (A.topRightCorner(n, n) + A.bottomLeftCorner(n, n).conjugate());
        Kt = 0.5 * (Kt + Kt.transpose()).eval();
        HermitianMatrix Kh = HermitianMatrix::symmetrize(K);
        if (!is_psd(HermitianMatrix::symmetrize(assemble_augmented(Kh.matrix(), Kt))))
            throw InfeasibleSecondOrder("augmented covariance is not positive semidefinite");
        return AugmentedCovariance(std::move(Kh), std::move(Kt));
    }

    HermitianMatrix AugmentedCovariance::augmented() const
    {
        return HermitianMatrix::symmetrize(assemble_augmented(K_.matrix(), Kt_));
    }

    ChannelPair::ChannelPair(ComplexMatrix Hr, ComplexMatrix He) : Hr_(std::move(Hr)), He_(std::move(He))
    {
        require_finite(Hr_, "H_r");
        require_finite(He_, "H_e");
        if (Hr_.cols() != He_.cols())
            throw DimensionError("H_r and H_e must have the same number of columns (n_t)");
        if (Hr_.cols() == 0 || Hr_.rows() == 0 || He_.rows() == 0)
            throw DimensionError("channel matrices must be non-empty");
    }

    ComplexMatrix augment_channel(const ComplexMatrix &H)
    {
        require_finite(H, "channel");
        return block_diag(H, H.conjugate());
    }

    ComplexMatrix widely_linear_transform(Index n)
    {
        const Complex i(0.0, 1.0);
        ComplexMatrix M(2 * n, 2 * n);
        M.topLeftCorner(n, n).setIdentity();
        M.topRightCorner(n, n) = i * ComplexMatrix::Identity(n, n);
        M.bottomLeftCorner(n, n).setIdentity();
        M.bottomRightCorner(n, n) = -i * ComplexMatrix::Identity(n, n);
        return M;
    }

    RealMatrix real_composite(const ComplexMatrix &H)
    {
        const Index r = H.rows(), c = H.cols();
        const double s = std::sqrt(2.0);
        RealMatrix R(2 * r, 2 * c);
        R.topLeftCorner(r, c) = s * H.real();
        R.topRightCorner(r, c) = -s * H.imag();
        R.bottomLeftCorner(r, c) = s * H.imag();
        R.bottomRightCorner(r, c) = s * H.real();
        return R;
    }

    RealCompositeChannel to_real_composite(const ChannelPair &ch)
    {
        return {real_composite(ch.legitimate()), real_composite(ch.eavesdropper())};
    }

    RealMatrix composite_covariance(const AugmentedCovariance &aug)
    {
        const ComplexMatrix M = widely_linear_transform(aug.dim());
        ComplexMatrix C = 0.25 * M.adjoint() * aug.augmented().matrix() * M;
        RealMatrix R = C.real();
        return 0.5 * (R + R.transpose());
    }

    AugmentedCovariance augmented_from_composite(const RealMatrix &Kbar)
    {
        if (Kbar.rows() != Kbar.cols() || Kbar.rows() % 2 != 0)
            throw DimensionError("composite covariance must be square with even dimension");
        const ComplexMatrix M = widely_linear_transform(Kbar.rows() / 2);
        ComplexMatrix A = M * Kbar.cast<Complex>() * M.adjoint();
        return AugmentedCovariance::from_augmented(HermitianMatrix::symmetrize(A));
    }

    SampleBatch sample_gaussian(const AugmentedCovariance &aug, std::size_t count, std::uint64_t seed)
    {
        if (count == 0)
            throw CountError("sample_gaussian: count must be at least 1");
        const Index n = aug.dim();
        RealMatrix Kbar = composite_covariance(aug);

        Eigen::SelfAdjointEigenSolver<RealMatrix> es(Kbar);
        Eigen::VectorXd ev = es.eigenvalues();
        double tol = 1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff());
        if (ev.minCoeff() < -tol)
            throw InfeasibleSecondOrder("composite covariance is not positive semidefinite");
        RealMatrix root = es.eigenvectors() * ev.cwiseMax(0.0).cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();

        std::mt19937_64 gen(seed);
        std::normal_distribution<double> normal(0.0, 1.0);

        SampleBatch batch;
        batch.n = n;
        batch.samples.resize(n, Index(count));
        Eigen::VectorXd z(2 * n);
        for (std::size_t s = 0; s < count; ++s)
        {
            for (Index i = 0; i < 2 * n; ++i)
                z(i) = normal(gen);
            Eigen::VectorXd x = root * z;
            for (Index i = 0; i < n; ++i)
                batch.samples(i, Index(s)) = Complex(x(i), x(n + i));
        }
        return batch;
    }

    SecondMoments estimate_augmented(const SampleBatch &batch)
    {
        if (batch.count() < 2)
            throw CountError("estimate_augmented: need at least two samples");
        if (batch.samples.rows() != batch.n)
            throw DimensionError("sample dimension does not match batch.n");
        const double inv = 1.0 / double(batch.count());
        const ComplexMatrix &X = batch.samples;
        ComplexMatrix K = inv * (X * X.adjoint());
        ComplexMatrix Kt = inv * (X * X.transpose());
        double scale = std::max(1.0, K.cwiseAbs().maxCoeff());
        if ((K - K.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale)
            throw InvalidMatrix("sample covariance is far from Hermitian");
        Kt = 0.5 * (Kt + Kt.transpose()).eval();
        return {HermitianMatrix::symmetrize(K), Kt};
    }
}
