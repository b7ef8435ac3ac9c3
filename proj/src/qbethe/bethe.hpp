#pragma once

#include "qbethe/monodromy.hpp"
#include "qbethe/weights.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qbethe {

// ---------------------------------------------------------------------------
// Nested partitions
//
// The universal off-shell vector of rank N is a sum over distributions
// of N-1 families of spectral parameters into triangular "cells".  A
// cell is labeled (i, j) with 1 <= i <= j <= N-1; it holds parameters
// of every level k with i <= k <= j, and holds the same number of them
// at each of those levels.
// ---------------------------------------------------------------------------

using Cell = std::pair<int, int>;

// Row-major order: (i,j) precedes (i',j') iff i < i', or i = i' and
// j < j'.
inline bool cellBefore(const Cell& a, const Cell& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
}

// Column-major order: (i,j) precedes (i',j') iff j < j', or j = j' and
// i < i'.
inline bool cellBeforeT(const Cell& a, const Cell& b) {
    return a.second < b.second || (a.second == b.second && a.first < b.first);
}

// Cells present at level k of a rank-N nesting (those with
// i <= k <= j), in row-major order.
std::vector<Cell> cellsAtLevel(int N, int k);

// One distribution of every level's parameters into cells.  Entry
// byLevel[k-1] maps each level-k cell to the ascending list of indices
// into that level's parameter list; absent parameters mean an empty
// cell, and every level-k cell appears as a key.
struct NestedPartition {
    std::vector<std::map<Cell, std::vector<int>>> byLevel;
};

// All nested partitions for a rank-N nesting with the given level
// sizes n_1..n_{N-1}.  Cell sizes are shared across the levels a cell
// belongs to.  Level sizes are capped at 3; larger requests are
// rejected.
std::vector<NestedPartition> enumerateNestedPartitions(
    int N, const std::vector<int>& levelSizes);

// ---------------------------------------------------------------------------
// Universal off-shell vectors
// ---------------------------------------------------------------------------

enum class BetheVariant {
    First,  // row-major cross-level pairing, left determinant kernel
    Second, // column-major cross-level pairing, right determinant kernel
};

namespace bethe_detail {

// Single-pair symmetrization factor f(x, y) = (qx - q^{-1}y)/(x - y).
template <class S>
S pairF(const S& q, const S& x, const S& y) {
    const S den = x - y;
    if (den == S(0)) {
        throw DomainError("symmetrization factor at coinciding arguments");
    }
    return (q * x - q.inverse() * y) / den;
}

// Product of f over all pairs of one list against another.
template <class S>
S listF(const S& q, const std::vector<S>& A, const std::vector<S>& B) {
    S out(1);
    for (const S& a : A) {
        for (const S& b : B) {
            out *= pairF(q, a, b);
        }
    }
    return out;
}

// T_{ij}(u) divided by prod_m (u - xi_m), the normalization that turns
// polynomial monodromy entries into rational ones.
template <class S>
SparseStateT<S> applyNormalized(const MonodromyContext<S>& ctx, int i, int j,
                                const S& u, const SparseStateT<S>& state) {
    S den(1);
    for (const S& x : ctx.xi) {
        den *= u - x;
    }
    if (den == S(0)) {
        throw DomainError("normalized monodromy element at an inhomogeneity");
    }
    return applyElement(ctx, i, j, u, state) * den.inverse();
}

} // namespace bethe_detail

// The universal off-shell vector of rank N in an n-site evaluation
// module with inhomogeneities w (convention-B trigonometric monodromy,
// normalized elements), applied to the all-color-1 reference state.
// tLevels[k-1] lists the level-k parameters, k = 1..N-1, with
// N = #levels + 1.  Both variants expand into the same sum over nested
// partitions of products of symmetrization factors, normalized
// determinant kernels between consecutive levels, and an ordered
// operator word; they differ in the pairing order and kernel side and
// agree as states.
template <class S>
SparseStateT<S> universalBetheVector(BetheVariant variant, const S& q,
                                     const std::vector<std::vector<S>>& tLevels,
                                     const std::vector<S>& w) {
    const int N = static_cast<int>(tLevels.size()) + 1;
    if (N < 2) {
        throw InvalidArgError("universal vector needs at least one level");
    }
    const int n = static_cast<int>(w.size());
    MonodromyContext<S> ctx;
    ctx.flavor = RFlavor::TrigB;
    ctx.N = N;
    ctx.qh = q;
    ctx.xi = w;
    std::vector<int> sizes;
    for (const auto& lvl : tLevels) {
        sizes.push_back(static_cast<int>(lvl.size()));
    }
    const std::vector<NestedPartition> partitions =
        enumerateNestedPartitions(N, sizes);
    const SparseStateT<S> vacuum =
        basisState<S>(N, ColorTuple(static_cast<std::size_t>(n), 1));
    SparseStateT<S> acc(N, n);
    for (const NestedPartition& part : partitions) {
        const auto values = [&](int level, const Cell& c) {
            std::vector<S> out;
            for (int t : part.byLevel[static_cast<std::size_t>(level - 1)].at(c)) {
                out.push_back(
                    tLevels[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(t)]);
            }
            return out;
        };
        S factor(1);
        // Within one level: f(later cell, earlier cell) over row-major
        // ordered pairs.
        for (int k = 1; k <= N - 1; ++k) {
            const std::vector<Cell> cells = cellsAtLevel(N, k);
            for (const Cell& ca : cells) {
                for (const Cell& cb : cells) {
                    if (cellBefore(ca, cb)) {
                        factor *= bethe_detail::listF(q, values(k, cb),
                                                      values(k, ca));
                    }
                }
            }
        }
        // Between consecutive levels: f(level-k cell, level-(k-1) cell)
        // over ordered pairs, and a determinant kernel for each cell
        // present at both levels.
        for (int k = 2; k <= N - 1; ++k) {
            const std::vector<Cell> upper = cellsAtLevel(N, k);
            const std::vector<Cell> lower = cellsAtLevel(N, k - 1);
            for (const Cell& c : upper) {
                for (const Cell& cp : lower) {
                    const bool prec = variant == BetheVariant::First
                                          ? cellBefore(c, cp)
                                          : cellBeforeT(c, cp);
                    if (prec) {
                        factor *= bethe_detail::listF(q, values(k, c),
                                                      values(k - 1, cp));
                    }
                }
            }
            for (const Cell& c : upper) {
                if (c.first <= k - 1 && k <= c.second) {
                    factor *= variant == BetheVariant::First
                                  ? ikLeftNormalized(q, values(k, c),
                                                     values(k - 1, c))
                                  : ikRightNormalized(q, values(k, c),
                                                      values(k - 1, c));
                }
            }
        }
        // The operator word; entries are listed leftmost first and the
        // rightmost factor acts first.
        struct Factor {
            int i;
            int j;
            std::vector<S> params;
        };
        std::vector<Factor> word;
        if (variant == BetheVariant::First) {
            for (int k = 1; k <= N - 1; ++k) {
                for (int j = N; j > k; --j) {
                    word.push_back({k, j, values(k, Cell(k, j - 1))});
                }
            }
            for (int k = 2; k <= N - 1; ++k) {
                for (const Cell& c : cellsAtLevel(N, k)) {
                    if (cellBefore(c, Cell(k, k))) {
                        word.push_back({k, k, values(k, c)});
                    }
                }
            }
        } else {
            for (int k = N - 1; k >= 1; --k) {
                for (int j = 1; j <= k; ++j) {
                    word.push_back({j, k + 1, values(k, Cell(j, k))});
                }
            }
            for (int k = 1; k <= N - 2; ++k) {
                for (const Cell& c : cellsAtLevel(N, k)) {
                    if (cellBeforeT(Cell(k, k), c)) {
                        word.push_back({k + 1, k + 1, values(k, c)});
                    }
                }
            }
        }
        SparseStateT<S> st = vacuum;
        for (auto it = word.rbegin(); it != word.rend() && !st.isZero(); ++it) {
            for (const S& u : it->params) {
                st = bethe_detail::applyNormalized(ctx, it->i, it->j, u, st);
                if (st.isZero()) {
                    break;
                }
            }
        }
        if (st.isZero()) {
            continue;
        }
        acc += st * factor;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Index-set partitions and Gelfand-Tsetlin vectors
// ---------------------------------------------------------------------------

// An ordered partition of the site index set {1..n} into N possibly
// empty parts, stored as 1-based position lists.
using GTPartition = std::vector<std::vector<int>>;

void checkGTPartition(int N, int n, const GTPartition& parts);

// All N^n ordered partitions of {1..n} into N parts, in the order of
// the color words (site 1 fastest).
std::vector<GTPartition> allGTPartitions(int N, int n);

// Values of w at the 1-based positions of one part.
std::vector<Rat> partValues(const std::vector<Rat>& w,
                            const std::vector<int>& part);

// Values of w at the positions of parts from..to (1-based, clipped to
// the valid range), concatenated in part-then-position order.
std::vector<Rat> unionValues(const std::vector<Rat>& w, const GTPartition& parts,
                             int from, int to);

// ---------------------------------------------------------------------------
// Specialized vectors.  Setting the level-k parameters to the union of
// the w-values of parts k+1..N turns the universal vector into a
// weighted operator word applied to the reference state.  psiFirst
// evaluates the pole-free rearrangement of the First variant at that
// specialization; psiViaLimit follows a generic line into the
// specialization point and takes the exact limit; the closed forms are
// the fully reduced right-hand sides.  All five agree.
// ---------------------------------------------------------------------------

SparseState psiFirst(const Rat& q, int N, const GTPartition& I,
                     const std::vector<Rat>& w);

SparseState psiFirstClosed(const Rat& q, int N, const GTPartition& I,
                           const std::vector<Rat>& w);

SparseState psiSecondClosed(const Rat& q, int N, const GTPartition& I,
                            const std::vector<Rat>& w);

SparseState psiViaLimit(BetheVariant variant, const Rat& q, int N,
                        const GTPartition& I, const std::vector<Rat>& w);

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin vectors on the all-color-N reference state and the
// proportionality between the two constructions.  Flavor TrigA or
// Rational; qh is q resp. h.
// ---------------------------------------------------------------------------

// Staircase word T_{21}(W_1) T_{32}(W_1 u W_2) ... applied to the
// all-color-N state, where W_j is the multiset of w-values of part j
// and unions accumulate left to right.
SparseState gtVectorChain(RFlavor flavor, const Rat& qh, int N,
                          const GTPartition& J, const std::vector<Rat>& w);

// Row word T_{N1}(W_1) T_{N2}(W_2) ... T_{N,N-1}(W_{N-1}) applied to
// the all-color-N state.
SparseState gtVectorProduct(RFlavor flavor, const Rat& qh, int N,
                            const GTPartition& J, const std::vector<Rat>& w);

// Scalar relating the two: chain = factor * product.
Rat gtProportionality(RFlavor flavor, const Rat& qh, int N,
                      const GTPartition& J, const std::vector<Rat>& w);

bool verifyGtProportionality(RFlavor flavor, const Rat& qh, int N,
                             const GTPartition& J, const std::vector<Rat>& w);

// Mirrored constructions on the all-color-1 reference state (flavor
// TrigB or Rational), with parts indexed so that part j feeds the
// operators with column index j.
SparseState gtVectorChainDual(RFlavor flavor, const Rat& qh, int N,
                              const GTPartition& I, const std::vector<Rat>& w);

SparseState gtVectorProductDual(RFlavor flavor, const Rat& qh, int N,
                                const GTPartition& I,
                                const std::vector<Rat>& w);

Rat gtProportionalityDual(RFlavor flavor, const Rat& qh, int N,
                          const GTPartition& I, const std::vector<Rat>& w);

bool verifyGtProportionalityDual(RFlavor flavor, const Rat& qh, int N,
                                 const GTPartition& I,
                                 const std::vector<Rat>& w);

// ---------------------------------------------------------------------------
// Quantum minors, quantum determinants, and the commutative-subalgebra
// eigenrelations (trigonometric conventions only).
// ---------------------------------------------------------------------------

// Applies the quantum minor with row indices `rows` and strictly
// increasing column indices `cols` at spectral parameter u: the
// alternating sum over permutations s of
// (-q)^{-inv(s)} T_{rows_r, cols_{s(r)}}(q^{2r-2}u) ... T_{rows_1, cols_{s(1)}}(u),
// the rightmost factor acting first and the m-th factor shifted by
// q^{2m-2}.
SparseState quantumMinorApply(const MonodromyContext<Rat>& ctx,
                              const std::vector<int>& rows,
                              const std::vector<int>& cols, const Rat& u,
                              const SparseState& state);

// Principal quantum determinant of the leading j-by-j block.
SparseState qdetApply(const MonodromyContext<Rat>& ctx, int j, const Rat& u,
                      const SparseState& state);

// Eigenvalue factor lambda_{jk}(u) of the principal quantum
// determinants on the Gelfand-Tsetlin vectors: the full product
// prod_m (u - w_m) for k < j, and for k = j the product
// (u - W_{j+1..N})(qu - q^{-1} W_{1..j}) over the indicated unions.
Rat gtEigenvalue(const Rat& q, const std::vector<Rat>& w, const GTPartition& J,
                 int j, int k, const Rat& u);

// qdet of the leading j-by-j block acts on both Gelfand-Tsetlin
// constructions as multiplication by
// prod_{k=1..j} lambda_{jk}(q^{2k-2}u), for every j = 1..N.
bool verifyQdetDiagonalization(const Rat& q, int N, const GTPartition& J,
                               const std::vector<Rat>& w, const Rat& u,
                               bool chainConstruction);

// [minor, T_{rows_m, cols_m}(v)] = 0 on the given state, for the
// 0-based position m.
bool verifyMinorElementCommute(const MonodromyContext<Rat>& ctx,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols, int m,
                               const Rat& u, const Rat& v,
                               const SparseState& state);

// One step of the singular-vector lemma.  Assumes eta is singular for
// the leading k-by-k block: T_{ij}(u) eta = 0 for i < j <= k and each
// T_{ii}(u) acts as a scalar mu_i(u).  When additionally
// T_{kk}(alpha) eta = 0, the vector T_{k+1,k}(alpha) eta is again
// singular with the k-th weight multiplied by
// (q u - q^{-1} alpha)/(u - alpha).  Checked exactly at the given u.
struct SingularStepResult {
    bool preconditionHeld = false;
    bool conclusionHeld = false;
    bool resultNonzero = false;
};

SingularStepResult singularVectorStep(const MonodromyContext<Rat>& ctx,
                                      const SparseState& eta, int k,
                                      const Rat& alpha, const Rat& u);

// The staircase suffixes of the chain construction, checked to be
// singular for the leading blocks with the lambda weights, down to the
// full chain vector.
bool verifySingularLadder(const Rat& q, int N, const GTPartition& J,
                          const std::vector<Rat>& w, const Rat& u);

// For every color profile, the Gelfand-Tsetlin vectors of all index
// partitions with that profile span their weight space: the square
// coefficient matrix is nonsingular.
bool verifyGtIndependence(const Rat& q, int N, int n,
                          const std::vector<Rat>& w, bool chainConstruction);

} // namespace qbethe
