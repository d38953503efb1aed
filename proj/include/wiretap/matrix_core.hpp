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

#ifndef WIRETAP_MATRIX_CORE_HPP
#define WIRETAP_MATRIX_CORE_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wiretap/errors.hpp"

namespace wiretap
{
    using Complex = std::complex<double>;
    using ComplexMatrix = Eigen::MatrixXcd;
    using RealMatrix = Eigen::MatrixXd;
    using Index = Eigen::Index;

    inline constexpr double tol_herm = 1e-12;

    /// Throws InvalidMatrix if any entry is NaN or infinite.
    void require_finite(const ComplexMatrix &M, const char *what = "matrix");
    void require_finite(const RealMatrix &M, const char *what = "matrix");

    // Square complex matrix equal to its conjugate transpose (per-entry
    // absolute tolerance tol_herm). Construction validates; `symmetrize`
    // projects an almost-Hermitian matrix onto the Hermitian subspace.
    class HermitianMatrix
    {
    public:
        HermitianMatrix() = default;
        explicit HermitianMatrix(ComplexMatrix M);

        static HermitianMatrix symmetrize(const ComplexMatrix &M);
        static HermitianMatrix identity(Index n);
        static HermitianMatrix zero(Index n);
        static HermitianMatrix diagonal(std::span<const double> d);

        const ComplexMatrix &matrix() const noexcept { return m_; }
        Index dim() const noexcept { return m_.rows(); }
        Complex operator()(Index i, Index j) const { return m_(i, j); }
        double trace() const { return m_.trace().real(); }

        HermitianMatrix operator+(const HermitianMatrix &o) const;
        HermitianMatrix operator-(const HermitianMatrix &o) const;
        HermitianMatrix operator*(double s) const;

    private:
        struct unchecked_t {};
        HermitianMatrix(ComplexMatrix M, unchecked_t) : m_(std::move(M)) {}
        ComplexMatrix m_;
    };

    struct Spectrum
    {
        Eigen::VectorXd values;  // ascending
        ComplexMatrix vectors;   // unitary, columns are eigenvectors
    };

    Spectrum eigen_decompose(const HermitianMatrix &M);
    double min_eigenvalue(const HermitianMatrix &M);
    double max_eigenvalue(const HermitianMatrix &M);
    double spectral_norm(const HermitianMatrix &M);

    /// 1e-10 * max(1, ||M||_2).
    double psd_tolerance(const HermitianMatrix &M);
    bool is_psd(const HermitianMatrix &M);
    bool is_pd(const HermitianMatrix &M);

    /// Natural-log determinant of a positive definite matrix via Cholesky.
    /// Throws NotPositiveDefinite when the smallest eigenvalue is not above
    /// psd_tolerance(M).
    double logdet_pd(const HermitianMatrix &M);

    /// log det(I + G K) for PSD G and K, evaluated as log det(I + K^1/2 G K^1/2)
    /// so the argument stays Hermitian.
    double logdet_identity_plus(const HermitianMatrix &G, const HermitianMatrix &K);

    /// Determinant by partial-pivot LU.
    Complex determinant(const ComplexMatrix &M);

    /// Hermitian principal square root of a PSD matrix. Eigenvalues below
    /// -psd_tolerance throw NotPositiveSemidefinite; small negatives are clipped.
    HermitianMatrix sqrt_psd(const HermitianMatrix &M);

    /// M(rows, cols) with the given 0-based indices, in the given order.
    ComplexMatrix submatrix(const ComplexMatrix &M, std::span<const Index> rows, std::span<const Index> cols);
    ComplexMatrix principal_submatrix(const ComplexMatrix &M, std::span<const Index> indices);
    HermitianMatrix principal_submatrix(const HermitianMatrix &M, std::span<const Index> indices);

    ComplexMatrix block_diag(const ComplexMatrix &A, const ComplexMatrix &B);

    // Sequential partition S1=[0,k1), S2=[k1,k2), S3=[k2,k3), S4=[k3,k) of
    // the index range [0,k). All four blocks are non-empty.
    class PartitionSpec
    {
    public:
        PartitionSpec(Index k1, Index k2, Index k3, Index k);

        Index k1() const noexcept { return k1_; }
        Index k2() const noexcept { return k2_; }
        Index k3() const noexcept { return k3_; }
        Index size() const noexcept { return k_; }

        /// Indices of block b (1..4).
        std::vector<Index> block(int b) const;
        /// Union of blocks, in ascending order.
        std::vector<Index> blocks(std::initializer_list<int> bs) const;
        /// Partition of the matrix produced by symmetric_block_permute.
        PartitionSpec swapped_middle() const { return {k1_, k1_ + (k3_ - k2_), k3_, k_}; }

    private:
        Index k1_, k2_, k3_, k_;
    };

    struct SylvesterSides
    {
        double lhs;  // |det(I_m + AB)|
        double rhs;  // |det(I_n + BA)|
    };

    SylvesterSides check_sylvester_identity(const ComplexMatrix &A, const ComplexMatrix &B);

    /// Swaps block-rows 2,3 and block-columns 2,3 of M under `part`.
    ComplexMatrix symmetric_block_permute(const ComplexMatrix &M, const PartitionSpec &part);
}

#endif
