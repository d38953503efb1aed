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

#include "wiretap/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wiretap
{
    void require_finite(const ComplexMatrix &M, const char *what)
    {
        for (Index j = 0; j < M.cols(); ++j)
            for (Index i = 0; i < M.rows(); ++i)
                if (!std::isfinite(M(i, j).real()) || !std::isfinite(M(i, j).imag()))
                    throw InvalidMatrix(std::string(what) + " has a non-finite entry");
    }

    void require_finite(const RealMatrix &M, const char *what)
    {
        if (!M.allFinite())
            throw InvalidMatrix(std::string(what) + " has a non-finite entry");
    }

    // ---------- HermitianMatrix ----------

    HermitianMatrix::HermitianMatrix(ComplexMatrix M)
    {
        if (M.rows() != M.cols())
            throw DimensionError("Hermitian matrix must be square");
        require_finite(M, "Hermitian matrix");
        for (Index i = 0; i < M.rows(); ++i)
            for (Index j = i; j < M.cols(); ++j)
                if (std::abs(M(i, j) - std::conj(M(j, i))) > tol_herm)
                    throw InvalidMatrix("matrix is not Hermitian within tol_herm");
        m_ = std::move(M);
    }

    HermitianMatrix HermitianMatrix::symmetrize(const ComplexMatrix &M)
    {
        if (M.rows() != M.cols())
            throw DimensionError("Hermitian matrix must be square");
        require_finite(M, "Hermitian matrix");
        ComplexMatrix S = 0.5 * (M + M.adjoint());
        return HermitianMatrix(std::move(S), unchecked_t{});
    }

    HermitianMatrix HermitianMatrix::identity(Index n)
    {
        return HermitianMatrix(ComplexMatrix::Identity(n, n), unchecked_t{});
    }

    HermitianMatrix HermitianMatrix::zero(Index n)
    {
        return HermitianMatrix(ComplexMatrix::Zero(n, n), unchecked_t{});
    }

    HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d)
    {
        ComplexMatrix M = ComplexMatrix::Zero(Index(d.size()), Index(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i)
            M(Index(i), Index(i)) = d[i];
        return HermitianMatrix(std::move(M));
    }

    HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix &o) const
    {
        if (dim() != o.dim())
            throw DimensionError("Hermitian sum: dimension mismatch");
        return HermitianMatrix(m_ + o.m_, unchecked_t{});
    }

    HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix &o) const
    {
        if (dim() != o.dim())
            throw DimensionError("Hermitian difference: dimension mismatch");
        return HermitianMatrix(m_ - o.m_, unchecked_t{});
    }

    HermitianMatrix HermitianMatrix::operator*(double s) const
    {
        return HermitianMatrix(m_ * s, unchecked_t{});
    }

    // ---------- spectra ----------

    Spectrum eigen_decompose(const HermitianMatrix &M)
    {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(M.matrix());
        if (es.info() != Eigen::Success)
            throw InvalidMatrix("eigendecomposition failed");
        return {es.eigenvalues(), es.eigenvectors()};
    }

    static Eigen::VectorXd eigenvalues_only(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            return {};
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(M.matrix(), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw InvalidMatrix("eigendecomposition failed");
        return es.eigenvalues();
    }

    double min_eigenvalue(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            throw DimensionError("min_eigenvalue of an empty matrix");
        return eigenvalues_only(M).minCoeff();
    }

    double max_eigenvalue(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            throw DimensionError("max_eigenvalue of an empty matrix");
        return eigenvalues_only(M).maxCoeff();
    }

    double spectral_norm(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            return 0.0;
        return eigenvalues_only(M).cwiseAbs().maxCoeff();
    }

    double psd_tolerance(const HermitianMatrix &M)
    {
        return 1e-10 * std::max(1.0, spectral_norm(M));
    }

    bool is_psd(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            return true;
        auto ev = eigenvalues_only(M);
        double tol = 1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff());
        return ev.minCoeff() >= -tol;
    }

    bool is_pd(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            return true;
        auto ev = eigenvalues_only(M);
        double tol = 1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff());
        return ev.minCoeff() > tol;
    }

    double logdet_pd(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            return 0.0;
        if (!is_pd(M))
            throw NotPositiveDefinite("logdet_pd: matrix is not positive definite");
        Eigen::LLT<ComplexMatrix> llt(M.matrix());
        if (llt.info() != Eigen::Success)
            throw NotPositiveDefinite("logdet_pd: Cholesky factorization failed");
        const ComplexMatrix &L = llt.matrixLLT();
        double s = 0.0;
        for (Index i = 0; i < L.rows(); ++i)
            s += std::log(L(i, i).real());
        return 2.0 * s;
    }

    double logdet_identity_plus(const HermitianMatrix &G, const HermitianMatrix &K)
    {
        if (G.dim() != K.dim())
            throw DimensionError("logdet_identity_plus: dimension mismatch");
        HermitianMatrix R = sqrt_psd(K);
        ComplexMatrix S = R.matrix() * G.matrix() * R.matrix();
        return logdet_pd(HermitianMatrix::symmetrize(ComplexMatrix::Identity(K.dim(), K.dim()) + S));
    }

    Complex determinant(const ComplexMatrix &M)
    {
        if (M.rows() != M.cols())
            throw DimensionError("determinant of a non-square matrix");
        if (M.rows() == 0)
            return 1.0;
        return M.partialPivLu().determinant();
    }

    HermitianMatrix sqrt_psd(const HermitianMatrix &M)
    {
        if (M.dim() == 0)
            return M;
        auto [vals, vecs] = eigen_decompose(M);
        double tol = 1e-10 * std::max(1.0, vals.cwiseAbs().maxCoeff());
        if (vals.minCoeff() < -tol)
            throw NotPositiveSemidefinite("sqrt_psd: matrix has a negative eigenvalue");
        Eigen::VectorXd r = vals.cwiseMax(0.0).cwiseSqrt();
        return HermitianMatrix::symmetrize(vecs * r.asDiagonal() * vecs.adjoint());
    }

    // ---------- submatrices ----------

    ComplexMatrix submatrix(const ComplexMatrix &M, std::span<const Index> rows, std::span<const Index> cols)
    {
        for (Index r : rows)
            if (r < 0 || r >= M.rows())
                throw IndexError("row index " + std::to_string(r) + " out of range");
        for (Index c : cols)
            if (c < 0 || c >= M.cols())
                throw IndexError("column index " + std::to_string(c) + " out of range");
        ComplexMatrix S(Index(rows.size()), Index(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                S(Index(i), Index(j)) = M(rows[i], cols[j]);
        return S;
    }

    ComplexMatrix principal_submatrix(const ComplexMatrix &M, std::span<const Index> indices)
    {
        if (M.rows() != M.cols())
            throw DimensionError("principal submatrix of a non-square matrix");
        return submatrix(M, indices, indices);
    }

    HermitianMatrix principal_submatrix(const HermitianMatrix &M, std::span<const Index> indices)
    {
        return HermitianMatrix::symmetrize(principal_submatrix(M.matrix(), indices));
    }

    ComplexMatrix block_diag(const ComplexMatrix &A, const ComplexMatrix &B)
    {
        ComplexMatrix D = ComplexMatrix::Zero(A.rows() + B.rows(), A.cols() + B.cols());
        D.topLeftCorner(A.rows(), A.cols()) = A;
        D.bottomRightCorner(B.rows(), B.cols()) = B;
        return D;
    }

    // ---------- partitions and identities ----------

    PartitionSpec::PartitionSpec(Index k1, Index k2, Index k3, Index k)
        : k1_(k1), k2_(k2), k3_(k3), k_(k)
    {
        if (!(0 < k1 && k1 < k2 && k2 < k3 && k3 < k))
            throw PartitionError("partition needs 0 < k1 < k2 < k3 < k");
    }

    std::vector<Index> PartitionSpec::block(int b) const
    {
        Index lo = 0, hi = 0;
        switch (b)
        {
        case 1: lo = 0, hi = k1_; break;
        case 2: lo = k1_, hi = k2_; break;
        case 3: lo = k2_, hi = k3_; break;
        case 4: lo = k3_, hi = k_; break;
        default: throw PartitionError("block number must be 1..4");
        }
        std::vector<Index> idx;
        for (Index i = lo; i < hi; ++i)
            idx.push_back(i);
        return idx;
    }

    std::vector<Index> PartitionSpec::blocks(std::initializer_list<int> bs) const
    {
        std::vector<Index> idx;
        for (int b : bs)
        {
            auto part = block(b);
            idx.insert(idx.end(), part.begin(), part.end());
        }
        std::sort(idx.begin(), idx.end());
        return idx;
    }

    SylvesterSides check_sylvester_identity(const ComplexMatrix &A, const ComplexMatrix &B)
    {
        if (A.cols() != B.rows() || A.rows() != B.cols())
            throw DimensionError("Sylvester identity needs A m x n and B n x m");
        require_finite(A, "A");
        require_finite(B, "B");
        const Index m = A.rows(), n = A.cols();
        ComplexMatrix L = ComplexMatrix::Identity(m, m) + A * B;
        ComplexMatrix R = ComplexMatrix::Identity(n, n) + B * A;
        return {std::abs(determinant(L)), std::abs(determinant(R))};
    }

    ComplexMatrix symmetric_block_permute(const ComplexMatrix &M, const PartitionSpec &part)
    {
        if (M.rows() != M.cols() || M.rows() != part.size())
            throw PartitionError("partition size does not match the matrix dimension");
        std::vector<Index> order;
        for (int b : {1, 3, 2, 4})
        {
            auto idx = part.block(b);
            order.insert(order.end(), idx.begin(), idx.end());
        }
        return submatrix(M, order, order);
    }
}
