#include "qbethe/grid.hpp"

#include "qbethe/errors.hpp"

namespace qbethe {

namespace {

std::vector<Rat> concatFamilies(const std::vector<std::vector<Rat>>& fams) {
    std::vector<Rat> out;
    for (const auto& f : fams) {
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

MonodromyContext<Rat> makeCtx(RFlavor flavor, const Rat& qh, int N,
                              std::vector<Rat> xi) {
    MonodromyContext<Rat> ctx;
    ctx.flavor = flavor;
    ctx.N = N;
    ctx.qh = qh;
    ctx.xi = std::move(xi);
    return ctx;
}

// The common contraction: bra of ascending color blocks, word
// T_N1(u^1) ... T_{N,N-1}(u^{N-1}), ket all color N.
Rat bandContraction(RFlavor flavor, const Rat& qh,
                    const std::vector<std::vector<Rat>>& uFam,
                    const std::vector<Rat>& xi, int extraN) {
    const int N = static_cast<int>(uFam.size()) + 1;
    int total = extraN;
    ColorTuple bra;
    for (int j = 1; j <= N - 1; ++j) {
        const auto& fam = uFam[static_cast<std::size_t>(j - 1)];
        total += static_cast<int>(fam.size());
        bra = concatTuples(bra, repeatTuple(j, static_cast<int>(fam.size())));
    }
    bra = concatTuples(bra, repeatTuple(N, extraN));
    if (static_cast<int>(xi.size()) != total) {
        throw InvalidArgError("band contraction: inhomogeneity count mismatch");
    }
    auto ctx = makeCtx(flavor, qh, N, xi);
    SparseState state = basisState<Rat>(N, repeatTuple(N, total));
    for (int j = N - 1; j >= 1; --j) {
        state = applyMultiset(ctx, N, j, uFam[static_cast<std::size_t>(j - 1)],
                              state);
    }
    return pairStates(basisState<Rat>(N, bra), state);
}

} // namespace

Rat domainWall(RFlavor flavor, const Rat& qh, const std::vector<Rat>& u,
               const std::vector<Rat>& v) {
    if (u.size() != v.size()) {
        throw InvalidArgError("domain wall needs equally long lists");
    }
    auto ctx = makeCtx(flavor, qh, 2, v);
    const int n = static_cast<int>(u.size());
    SparseState state =
        applyMultiset(ctx, 2, 1, u, basisState<Rat>(2, repeatTuple(2, n)));
    return pairStates(basisState<Rat>(2, repeatTuple(1, n)), state);
}

Rat domainWallColored(RFlavor flavor, const Rat& qh, int N, int j,
                      const std::vector<Rat>& vj, const std::vector<Rat>& v0) {
    if (vj.size() != v0.size()) {
        throw InvalidArgError("colored domain wall needs equally long lists");
    }
    if (j < 1 || j >= N) {
        throw InvalidArgError("colored domain wall needs 1 <= j < N");
    }
    auto ctx = makeCtx(flavor, qh, N, v0);
    const int m = static_cast<int>(vj.size());
    SparseState state =
        applyMultiset(ctx, N, j, vj, basisState<Rat>(N, repeatTuple(N, m)));
    return pairStates(basisState<Rat>(N, repeatTuple(j, m)), state);
}

Rat psiLayered(RFlavor flavor, const Rat& qh,
               const std::vector<std::vector<Rat>>& layers,
               const std::vector<Rat>& v, const ColorTuple& I) {
    const int numLayers = static_cast<int>(layers.size());
    const int N = numLayers + 1;
    const int L = static_cast<int>(v.size());
    if (static_cast<int>(I.size()) != L) {
        throw InvalidArgError("layered reconstruction: coloring length mismatch");
    }
    if (numLayers == 0) {
        return Rat(1);
    }
    const int k1 = static_cast<int>(layers[0].size());
    SparseState prev = basisState<Rat>(N, repeatTuple(1, k1));
    for (int p = 1; p <= numLayers; ++p) {
        const auto& up = layers[static_cast<std::size_t>(p - 1)];
        const std::vector<Rat>& nextXi =
            p < numLayers ? layers[static_cast<std::size_t>(p)] : v;
        const int kNext = static_cast<int>(nextXi.size());
        auto ctx = makeCtx(flavor, qh, N, nextXi);
        SparseState next(N, kNext);
        const SparseState seed = basisState<Rat>(N, repeatTuple(p + 1, kNext));
        for (const auto& [key, coeff] : prev.entries()) {
            // T_{p+1, c_1}(u^p_1) ... T_{p+1, c_{k_p}}(u^p_{k_p}),
            // rightmost factor applied first.
            SparseState acc = seed;
            for (std::size_t a = key.size(); a-- > 0;) {
                acc = applyElement(ctx, p + 1, key[a], up[a], acc);
            }
            acc *= coeff;
            next += acc;
        }
        prev = std::move(next);
    }
    return prev.coeff(I);
}

Rat gridH(RFlavor flavor, const Rat& qh,
          const std::vector<std::vector<Rat>>& uFam,
          const std::vector<std::vector<Rat>>& vFam) {
    if (uFam.size() != vFam.size()) {
        throw InvalidArgError("band contraction: family count mismatch");
    }
    return bandContraction(flavor, qh, uFam, concatFamilies(vFam), 0);
}

Rat gridK(RFlavor flavor, const Rat& qh,
          const std::vector<std::vector<Rat>>& uFam,
          const std::vector<std::vector<Rat>>& vFam) {
    if (vFam.size() != uFam.size() + 1) {
        throw InvalidArgError("enlarged band contraction: family count mismatch");
    }
    const int extraN = static_cast<int>(vFam.back().size());
    return bandContraction(flavor, qh, uFam, concatFamilies(vFam), extraN);
}

Rat gridKColored(RFlavor flavor, const Rat& qh, int N,
                 const std::vector<std::vector<Rat>>& wParts,
                 const std::vector<Rat>& w, const ColorTuple& I) {
    if (static_cast<int>(wParts.size()) != N - 1) {
        throw InvalidArgError("colored contraction: need N-1 parts");
    }
    const int n = static_cast<int>(w.size());
    if (static_cast<int>(I.size()) != n) {
        throw InvalidArgError("colored contraction: coloring length mismatch");
    }
    auto ctx = makeCtx(flavor, qh, N, w);
    SparseState state = basisState<Rat>(N, repeatTuple(N, n));
    for (int j = N - 1; j >= 1; --j) {
        state = applyMultiset(ctx, N, j, wParts[static_cast<std::size_t>(j - 1)],
                              state);
    }
    return pairStates(basisState<Rat>(N, I), state);
}

Rat gridF(RFlavor flavor, const Rat& qh,
          const std::vector<std::vector<Rat>>& uFamAll,
          const std::vector<std::vector<Rat>>& vFam) {
    if (uFamAll.size() != vFam.size() + 1) {
        throw InvalidArgError("extended band contraction: family count mismatch");
    }
    const int N = static_cast<int>(uFamAll.size());
    std::vector<std::vector<Rat>> uFam(uFamAll.begin(), uFamAll.end() - 1);
    const std::vector<Rat> xi = concatFamilies(vFam);
    int total = 0;
    ColorTuple bra;
    for (int j = 1; j <= N - 1; ++j) {
        const auto& fam = uFam[static_cast<std::size_t>(j - 1)];
        total += static_cast<int>(fam.size());
        bra = concatTuples(bra, repeatTuple(j, static_cast<int>(fam.size())));
    }
    if (static_cast<int>(xi.size()) != total) {
        throw InvalidArgError(
            "extended band contraction: inhomogeneity count mismatch");
    }
    auto ctx = makeCtx(flavor, qh, N, xi);
    SparseState state = basisState<Rat>(N, repeatTuple(N, total));
    state = applyMultiset(ctx, N, N, uFamAll.back(), state);
    for (int j = N - 1; j >= 1; --j) {
        state = applyMultiset(ctx, N, j, uFam[static_cast<std::size_t>(j - 1)],
                              state);
    }
    return pairStates(basisState<Rat>(N, bra), state);
}

} // namespace qbethe
