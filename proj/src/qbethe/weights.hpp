#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/rational.hpp"
#include "qbethe/rmatrix.hpp"
#include "qbethe/state.hpp"

#include <functional>
#include <vector>

namespace qbethe {

// ---------------------------------------------------------------------------
// Set products.  A "set" here is an ordered list of scalars; products
// run over all pairs (a in A, b in B).
// ---------------------------------------------------------------------------

// prod (a - b).
template <class S>
S setDiff(const std::vector<S>& A, const std::vector<S>& B) {
    S acc(1);
    for (const S& a : A) {
        for (const S& b : B) {
            acc *= a - b;
        }
    }
    return acc;
}

// prod (q a - q^-1 b).
template <class S>
S setQDiff(const S& q, const std::vector<S>& A, const std::vector<S>& B) {
    const S qi = q.inverse();
    S acc(1);
    for (const S& a : A) {
        for (const S& b : B) {
            acc *= q * a - qi * b;
        }
    }
    return acc;
}

// prod (a - b + h).
template <class S>
S setShiftDiff(const std::vector<S>& A, const std::vector<S>& B, const S& h) {
    S acc(1);
    for (const S& a : A) {
        for (const S& b : B) {
            acc *= a - b + h;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Exact determinant (fraction-free Bareiss elimination with row
// pivoting; works over any exact field scalar).
// ---------------------------------------------------------------------------

template <class S>
S determinant(std::vector<std::vector<S>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw InvalidArgError("determinant of a non-square matrix");
        }
    }
    if (n == 0) {
        return S(1);
    }
    bool negate = false;
    S prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == S(0)) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == S(0)) {
                ++swap;
            }
            if (swap == n) {
                return S(0);
            }
            std::swap(m[k], m[swap]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = S(0);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Determinant representations of the homogeneous-boundary partition
// function, in the "left" and "right" kernel forms, plus normalized
// variants dividing out the full Cauchy-type product.
// ---------------------------------------------------------------------------

namespace detail {

template <class S>
void checkSquareLists(const std::vector<S>& u, const std::vector<S>& v) {
    if (u.size() != v.size()) {
        throw InvalidArgError("determinant form needs equally long lists");
    }
}

// 1 / prod_{i<j} (u_i - u_j)(v_j - v_i); throws DomainError when the
// parameter lists are degenerate.
template <class S>
S inverseVandermonde(const std::vector<S>& u, const std::vector<S>& v) {
    S acc(1);
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const S du = u[i] - u[j];
            const S dv = v[j] - v[i];
            if (du == S(0) || dv == S(0)) {
                throw DomainError("coinciding parameters in determinant form");
            }
            acc *= du * dv;
        }
    }
    return S(1) / acc;
}

} // namespace detail

// Trigonometric left form: row kernel (q - q^-1) u_i.
template <class S>
S ikLeft(const S& q, const std::vector<S>& u, const std::vector<S>& v) {
    detail::checkSquareLists(u, v);
    const std::size_t n = u.size();
    const S qi = q.inverse();
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            S entry = (q - qi) * u[i];
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) {
                    entry *= (q * u[i] - qi * v[k]) * (u[i] - v[k]);
                }
            }
            m[i][j] = entry;
        }
    }
    return determinant(std::move(m)) * detail::inverseVandermonde(u, v);
}

// Trigonometric right form: column kernel (q - q^-1) v_j.
template <class S>
S ikRight(const S& q, const std::vector<S>& u, const std::vector<S>& v) {
    detail::checkSquareLists(u, v);
    const std::size_t n = u.size();
    const S qi = q.inverse();
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            S entry = (q - qi) * v[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) {
                    entry *= (q * u[k] - qi * v[j]) * (u[k] - v[j]);
                }
            }
            m[i][j] = entry;
        }
    }
    return determinant(std::move(m)) * detail::inverseVandermonde(u, v);
}

// Rational form: kernel h with shifted differences.
template <class S>
S ikRational(const S& h, const std::vector<S>& x, const std::vector<S>& y) {
    detail::checkSquareLists(x, y);
    const std::size_t n = x.size();
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            S entry = h;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) {
                    entry *= (x[i] - y[k] + h) * (x[i] - y[k]);
                }
            }
            m[i][j] = entry;
        }
    }
    return determinant(std::move(m)) * detail::inverseVandermonde(x, y);
}

// Normalized variants: the polynomial form divided by
// prod_{i,j} (u_i - v_j).
template <class S>
S ikLeftNormalized(const S& q, const std::vector<S>& u,
                   const std::vector<S>& v) {
    const S den = setDiff(u, v);
    if (den == S(0)) {
        throw DomainError("normalized determinant form at a pole");
    }
    return ikLeft(q, u, v) / den;
}

template <class S>
S ikRightNormalized(const S& q, const std::vector<S>& u,
                    const std::vector<S>& v) {
    const S den = setDiff(u, v);
    if (den == S(0)) {
        throw DomainError("normalized determinant form at a pole");
    }
    return ikRight(q, u, v) / den;
}

// ---------------------------------------------------------------------------
// Scalar building blocks and the weight function.
// ---------------------------------------------------------------------------

// f(u,v) = (q u - q^-1 v)/(u - v) trigonometric, (u - v + h)/(u - v)
// rational.
Rat fFunction(RFlavor flavor, const Rat& qh, const Rat& u, const Rat& v);

// Flavor dispatch over the determinant forms (trigonometric = left form).
Rat ikDeterminant(RFlavor flavor, const Rat& qh, const std::vector<Rat>& u,
                  const std::vector<Rat>& v);

// The nested-sum weight function.
//
//  * layers: parameter lists u^1 .. u^{N-1} with sizes k_1 <= ... <= k_{N-1};
//  * v: the length-L inhomogeneity list;
//  * I: the length-L boundary coloring with colors in 1..N, where
//    exactly k_p entries have color <= p.
//
// Layer p < N-1 couples to layer p+1 through the relabelled positions
// of its color set; the top layer couples directly to v and the
// positions in I.  Within each layer the summation is symmetrized over
// permutations with the standard two-point ratio.
Rat weightW(RFlavor flavor, const Rat& qh,
            const std::vector<std::vector<Rat>>& layers,
            const std::vector<Rat>& v, const ColorTuple& I);

// Enumerates the permutations of {0,..,k-1} in lexicographic order.
void forEachPermutation(int k,
                        const std::function<void(const std::vector<int>&)>& fn);

} // namespace qbethe
