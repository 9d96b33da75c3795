// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace gxrepair {

// Binary relation over the node indices {0..n-1} as a dense boolean matrix,
// and node sets as boolean column vectors.
using Relation = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using NodeMask = Eigen::Array<bool, Eigen::Dynamic, 1>;

namespace rel {

inline Relation empty(Eigen::Index n) { return Relation::Constant(n, n, false); }
inline Relation full(Eigen::Index n) { return Relation::Constant(n, n, true); }

inline Relation identity(Eigen::Index n) {
    Relation r = empty(n);
    r.matrix().diagonal().setConstant(true);
    return r;
}

inline Relation diagonal(const NodeMask& m) {
    Relation r = empty(m.size());
    r.matrix().diagonal() = m.matrix();
    return r;
}

// Relational composition r ∘ s through a counting product in `Scalar`.
template <typename Scalar = float, typename A, typename B>
Relation compose(const Eigen::ArrayBase<A>& r, const Eigen::ArrayBase<B>& s) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Matrix product = r.template cast<Scalar>().matrix() * s.template cast<Scalar>().matrix();
    return product.array() > Scalar(0);
}

// Reflexive-transitive closure by repeated squaring of (I ∪ r).
template <typename A>
Relation closure(const Eigen::ArrayBase<A>& r) {
    const Eigen::Index n = r.rows();
    Relation acc = r.derived() || identity(n);
    for (;;) {
        Relation next = compose(acc, acc);
        if ((next == acc).all()) {
            return acc;
        }
        acc = std::move(next);
    }
}

// k-fold composition, k = 0 giving the identity.
template <typename A>
Relation power(const Eigen::ArrayBase<A>& r, std::size_t k) {
    Relation acc = identity(r.rows());
    Relation base = r.derived();
    while (k > 0) {
        if (k & 1U) {
            acc = compose(acc, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = compose(base, base);
        }
    }
    return acc;
}

// {v | exists w, (v, w) in r}
template <typename A>
NodeMask domain(const Eigen::ArrayBase<A>& r) {
    return r.rowwise().any();
}

}  // namespace rel
}  // namespace gxrepair
