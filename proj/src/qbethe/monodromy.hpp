#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/rmatrix.hpp"
#include "qbethe/state.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qbethe {

// Evaluation context for monodromy matrix elements acting on a quantum
// space (C^N)^{(x) n} with fixed inhomogeneities xi_1..xi_n.
//
// The monodromy operator is the ordered product of R operators coupling
// one auxiliary line to the n quantum sites, the site-1 factor acting
// first.  T_{ij}(u) is the auxiliary matrix element: the auxiliary line
// enters with color j, exits with color i.  Consequently T_{ij} raises
// the number of color-j sites by one and lowers color i.
template <class S>
struct MonodromyContext {
    RFlavor flavor = RFlavor::TrigA;
    int N = 2;
    S qh = S(0);
    std::vector<S> xi;

    int sites() const { return static_cast<int>(xi.size()); }
};

// Applies T_{ij}(u) to a state, walking the auxiliary line across the
// sites with at most two branches per site (pass-through or exchange).
template <class S>
SparseStateT<S> applyElement(const MonodromyContext<S>& ctx, int i, int j,
                             const S& u, const SparseStateT<S>& state) {
    const int n = ctx.sites();
    if (state.sites() != n || state.rank() != ctx.N) {
        throw InvalidArgError("applyElement: state does not match context");
    }
    if (i < 1 || i > ctx.N || j < 1 || j > ctx.N) {
        throw InvalidArgError("applyElement: color out of range");
    }
    SparseStateT<S> out(ctx.N, n);
    ColorTuple work(static_cast<std::size_t>(n));
    std::function<void(const ColorTuple&, int, int, const S&)> walk =
        [&](const ColorTuple& key, int site, int aux, const S& acc) {
            if (site == n) {
                if (aux == i) {
                    out.add(work, acc);
                }
                return;
            }
            const std::size_t s = static_cast<std::size_t>(site);
            const int c = key[s];
            const S& xi_s = ctx.xi[s];
            // Pass-through: auxiliary color survives, site color survives.
            {
                const S w = rElement(ctx.flavor, ctx.qh, u, xi_s, aux, c, aux, c);
                work[s] = c;
                walk(key, site + 1, aux, acc * w);
            }
            // Exchange: auxiliary color and site color swap.
            if (aux != c) {
                const S w = rElement(ctx.flavor, ctx.qh, u, xi_s, aux, c, c, aux);
                work[s] = aux;
                walk(key, site + 1, c, acc * w);
                work[s] = c;
            }
        };
    for (const auto& [key, coeff] : state.entries()) {
        walk(key, 0, j, coeff);
    }
    return out;
}

// Applies T_{ij}(u) on the right to a covector: the result pairs with a
// state s exactly as `dual` pairs with T_{ij}(u) s.  The auxiliary walk
// runs site n down to site 1, with the outgoing color i known at the
// far end and the incoming color required to be j at the near end.
template <class S>
SparseStateT<S> applyDualElement(const MonodromyContext<S>& ctx, int i, int j,
                                 const S& u, const SparseStateT<S>& dual) {
    const int n = ctx.sites();
    if (dual.sites() != n || dual.rank() != ctx.N) {
        throw InvalidArgError("applyDualElement: state does not match context");
    }
    if (i < 1 || i > ctx.N || j < 1 || j > ctx.N) {
        throw InvalidArgError("applyDualElement: color out of range");
    }
    SparseStateT<S> out(ctx.N, n);
    ColorTuple work(static_cast<std::size_t>(n));
    std::function<void(const ColorTuple&, int, int, const S&)> walk =
        [&](const ColorTuple& key, int site, int auxOut, const S& acc) {
            if (site < 0) {
                if (auxOut == j) {
                    out.add(work, acc);
                }
                return;
            }
            const std::size_t s = static_cast<std::size_t>(site);
            const int c = key[s]; // output color at this site
            const S& xi_s = ctx.xi[s];
            // Pass-through: input colors equal output colors.
            {
                const S w =
                    rElement(ctx.flavor, ctx.qh, u, xi_s, auxOut, c, auxOut, c);
                work[s] = c;
                walk(key, site - 1, auxOut, acc * w);
            }
            // Exchange: input pair was (c_out, aux_out).
            if (auxOut != c) {
                const S w =
                    rElement(ctx.flavor, ctx.qh, u, xi_s, c, auxOut, auxOut, c);
                work[s] = auxOut;
                walk(key, site - 1, c, acc * w);
                work[s] = c;
            }
        };
    for (const auto& [key, coeff] : dual.entries()) {
        walk(key, n - 1, i, coeff);
    }
    return out;
}

// Product T_{ij}(p_1) T_{ij}(p_2) ... T_{ij}(p_k) applied to a state.
// Elements with equal indices commute, so the order inside `params`
// does not matter.
template <class S>
SparseStateT<S> applyMultiset(const MonodromyContext<S>& ctx, int i, int j,
                              const std::vector<S>& params,
                              const SparseStateT<S>& state) {
    SparseStateT<S> acc = state;
    for (std::size_t k = params.size(); k-- > 0;) {
        acc = applyElement(ctx, i, j, params[k], acc);
    }
    return acc;
}

// One factor of an operator word: T_{ij} evaluated at each parameter in
// `params` (leftmost parameter applied last).
template <class S>
struct WordFactor {
    int i = 1;
    int j = 1;
    std::vector<S> params;
};

template <class S>
using OperatorWord = std::vector<WordFactor<S>>;

// Applies an operator word to a state; word[0] is the leftmost factor,
// so it acts last.
template <class S>
SparseStateT<S> applyWord(const MonodromyContext<S>& ctx,
                          const OperatorWord<S>& word,
                          const SparseStateT<S>& state) {
    SparseStateT<S> acc = state;
    for (std::size_t f = word.size(); f-- > 0;) {
        acc = applyMultiset(ctx, word[f].i, word[f].j, word[f].params, acc);
    }
    return acc;
}

// Enumerates all N^n color tuples in lexicographic order.
inline std::vector<ColorTuple> allColorTuples(int N, int n) {
    std::vector<ColorTuple> out;
    ColorTuple key(static_cast<std::size_t>(n), 1);
    for (;;) {
        out.push_back(key);
        int pos = n - 1;
        while (pos >= 0 && key[static_cast<std::size_t>(pos)] == N) {
            key[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++key[static_cast<std::size_t>(pos)];
    }
    if (n == 0) {
        out.assign(1, ColorTuple{});
    }
    return out;
}

// The full matrix of an operator word in the tensor basis: for every
// basis tuple K the column word * e_K.  Two words are equal as
// operators iff their matrices agree.
template <class S>
std::map<ColorTuple, SparseStateT<S>> wordMatrix(
    const MonodromyContext<S>& ctx, const OperatorWord<S>& word) {
    std::map<ColorTuple, SparseStateT<S>> out;
    for (const ColorTuple& key : allColorTuples(ctx.N, ctx.sites())) {
        out.emplace(key, applyWord(ctx, word, basisState<S>(ctx.N, key)));
    }
    return out;
}

} // namespace qbethe
