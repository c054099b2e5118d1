// SPDX-License-Identifier: Apache-2.0
//
// cran-noma: rate analysis for eMBB/URLLC coexistence over analog-fronthaul C-RAN
// Copyright (C) 2026 The cran-noma authors
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

#ifndef CRAN_LINALG_HPP
#define CRAN_LINALG_HPP

#include <Eigen/Dense>

namespace cran
{

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Kronecker product a (x) b for any two dense Eigen expressions of equal scalar type.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b)
{
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Column-major vec(.) and its inverse with a given number of columns.
template <typename Derived>
auto vec(const Eigen::MatrixBase<Derived> &x)
{
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = x;
    return Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(m.data(), m.size()));
}

template <typename Derived>
auto unvec(const Eigen::MatrixBase<Derived> &v, Eigen::Index cols)
{
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c = v;
    return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(
        Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>(c.data(), c.size() / cols, cols));
}

inline Matrix ones(Eigen::Index rows, Eigen::Index cols) { return Matrix::Ones(rows, cols); }

inline Matrix symmetrize(const Matrix &x) { return 0.5 * (x + x.transpose()); }

// n x n cyclic shift: (P x)_i = x_{i-1 mod n}.
inline Matrix cyclic_shift(Eigen::Index n)
{
    Matrix p = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        p(i, (i + n - 1) % n) = 1.0;
    return p;
}

// Largest |a_ij - b_ij| relative to the largest |b_ij| (absolute when b vanishes).
template <typename DA, typename DB>
double max_rel_diff(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b)
{
    const double scale = b.cwiseAbs().maxCoeff();
    const double diff = (a - b).cwiseAbs().maxCoeff();
    return scale > 0.0 ? diff / scale : diff;
}

} // namespace cran

#endif
