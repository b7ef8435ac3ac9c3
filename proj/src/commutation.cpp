#include "qbethe/commutation.hpp"

#include "qbethe/errors.hpp"
#include "qbethe/grid.hpp"
#include "qbethe/weights.hpp"

#include <functional>
#include <numeric>

namespace qbethe {

namespace {

std::vector<Rat> concatFamilies(const std::vector<std::vector<Rat>>& fams) {
    std::vector<Rat> out;
    for (const auto& f : fams) {
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

// Cumulative unions u^1, u^1 u u^2, ..., over the first `count` families.
std::vector<std::vector<Rat>> cumulativeLayers(
    const std::vector<std::vector<Rat>>& fams, int count) {
    std::vector<std::vector<Rat>> layers;
    std::vector<Rat> acc;
    for (int j = 0; j < count; ++j) {
        acc.insert(acc.end(), fams[static_cast<std::size_t>(j)].begin(),
                   fams[static_cast<std::size_t>(j)].end());
        layers.push_back(acc);
    }
    return layers;
}

// Ascending block coloring 1^{m_1} 2^{m_2} ... with m_j = |fams[j-1]|.
ColorTuple blockColoring(const std::vector<std::vector<Rat>>& fams) {
    ColorTuple I;
    for (std::size_t j = 0; j < fams.size(); ++j) {
        I = concatTuples(
            I, repeatTuple(static_cast<int>(j + 1),
                           static_cast<int>(fams[j].size())));
    }
    return I;
}

Rat checkedDiv(const Rat& num, const Rat& den) {
    if (den.isZero()) {
        throw DomainError("commutation coefficient at a vanishing denominator");
    }
    return num / den;
}

// prod (q a - q^-1 b) or prod (a - b + h) depending on flavor.
Rat crossFactor(RFlavor flavor, const Rat& qh, const std::vector<Rat>& A,
                const std::vector<Rat>& B) {
    switch (flavor) {
        case RFlavor::TrigA:
        case RFlavor::TrigB:
            return setQDiff(qh, A, B);
        case RFlavor::Rational:
            return setShiftDiff(A, B, qh);
    }
    throw InvalidArgError("unknown flavor");
}

// The triple product prod_{l=1}^{N-2} prod_{j<=l} prod_{k<=l+1} of
// cross factors between source families.
Rat sourceTriple(RFlavor flavor, const Rat& qh,
                 const std::vector<std::vector<Rat>>& uFam) {
    const int N = static_cast<int>(uFam.size());
    Rat acc(1);
    for (int l = 1; l <= N - 2; ++l) {
        for (int j = 1; j <= l; ++j) {
            for (int k = 1; k <= l + 1; ++k) {
                acc *= crossFactor(flavor, qh, uFam[static_cast<std::size_t>(j - 1)],
                                   uFam[static_cast<std::size_t>(k - 1)]);
            }
        }
    }
    return acc;
}

// 1 / prod_{1<=j<k<=N} (v^k - v^j) * cross(v^j, v^{k-1}).
Rat targetDenominator(RFlavor flavor, const Rat& qh,
                      const std::vector<std::vector<Rat>>& vFam) {
    const int N = static_cast<int>(vFam.size());
    Rat acc(1);
    for (int j = 1; j <= N; ++j) {
        for (int k = j + 1; k <= N; ++k) {
            acc *= setDiff(vFam[static_cast<std::size_t>(k - 1)],
                           vFam[static_cast<std::size_t>(j - 1)]);
            acc *= crossFactor(flavor, qh, vFam[static_cast<std::size_t>(j - 1)],
                               vFam[static_cast<std::size_t>(k - 2)]);
        }
    }
    return checkedDiv(Rat(1), acc);
}

void checkFamilies(const std::vector<std::vector<Rat>>& uFam,
                   const std::vector<std::vector<Rat>>& vFam) {
    if (uFam.size() != vFam.size() || uFam.empty()) {
        throw InvalidArgError("commutation coefficient: family count mismatch");
    }
    for (std::size_t j = 0; j < uFam.size(); ++j) {
        if (uFam[j].size() != vFam[j].size()) {
            throw InvalidArgError("commutation coefficient: size mismatch");
        }
    }
}

} // namespace

namespace {

// Lexicographically ordered k-subsets of `indices` (which is sorted).
void forEachCombination(const std::vector<int>& indices, int k,
                        const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == k) {
            fn(chosen);
            return;
        }
        const int missing = k - static_cast<int>(chosen.size());
        for (std::size_t i = from;
             i + static_cast<std::size_t>(missing) <= indices.size(); ++i) {
            chosen.push_back(indices[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

void partitionRec(const std::vector<Rat>& pool,
                  const std::vector<int>& targetSizes, std::size_t family,
                  const std::vector<int>& remaining,
                  std::vector<std::vector<Rat>>& current,
                  std::vector<std::vector<std::vector<Rat>>>& out) {
    if (family == targetSizes.size()) {
        out.push_back(current);
        return;
    }
    forEachCombination(
        remaining, targetSizes[family], [&](const std::vector<int>& chosen) {
            std::vector<Rat> fam;
            for (int idx : chosen) {
                fam.push_back(pool[static_cast<std::size_t>(idx)]);
            }
            std::vector<int> rest;
            std::size_t c = 0;
            for (int idx : remaining) {
                if (c < chosen.size() && chosen[c] == idx) {
                    ++c;
                } else {
                    rest.push_back(idx);
                }
            }
            current.push_back(std::move(fam));
            partitionRec(pool, targetSizes, family + 1, rest, current, out);
            current.pop_back();
        });
}

} // namespace

std::vector<std::vector<std::vector<Rat>>> enumeratePartitions(
    const std::vector<std::vector<Rat>>& sources,
    const std::vector<int>& targetSizes) {
    const std::vector<Rat> pool = concatFamilies(sources);
    const int total = static_cast<int>(pool.size());
    const int want = std::accumulate(targetSizes.begin(), targetSizes.end(), 0);
    if (want != total) {
        throw InvalidArgError("partition enumeration: sizes do not add up");
    }
    for (int s : targetSizes) {
        if (s < 0) {
            throw InvalidArgError("partition enumeration: negative size");
        }
    }
    std::vector<int> all(static_cast<std::size_t>(total));
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<std::vector<Rat>>> out;
    std::vector<std::vector<Rat>> current;
    partitionRec(pool, targetSizes, 0, all, current, out);
    return out;
}

Rat commutationCoefficient(RFlavor flavor, const Rat& qh,
                           const std::vector<std::vector<Rat>>& uFam,
                           const std::vector<std::vector<Rat>>& vFam,
                           CoeffRoute route) {
    checkFamilies(uFam, vFam);
    const int N = static_cast<int>(uFam.size());
    const auto& uN = uFam[static_cast<std::size_t>(N - 1)];
    const auto& vN = vFam[static_cast<std::size_t>(N - 1)];
    const Rat denomPart = targetDenominator(flavor, qh, vFam);
    // prod_{j=1}^{N-1} cross(u^N, v^j).
    Rat numer(1);
    for (int j = 1; j <= N - 1; ++j) {
        numer *= crossFactor(flavor, qh, uN, vFam[static_cast<std::size_t>(j - 1)]);
    }
    switch (route) {
        case CoeffRoute::WeightFunction: {
            Rat den(1);
            for (int j = 1; j <= N - 1; ++j) {
                den *= crossFactor(flavor, qh,
                                   uFam[static_cast<std::size_t>(j - 1)], vN);
            }
            den *= sourceTriple(flavor, qh, uFam);
            const Rat w = weightW(flavor, qh, cumulativeLayers(uFam, N - 1),
                                  concatFamilies(vFam), blockColoring(vFam));
            return denomPart * checkedDiv(numer, den) * w;
        }
        case CoeffRoute::BandContraction: {
            const std::vector<std::vector<Rat>> uBand(uFam.begin(),
                                                      uFam.end() - 1);
            const std::vector<std::vector<Rat>> vBand(vFam.begin(),
                                                      vFam.end() - 1);
            const Rat H = gridH(flavor, qh, uBand, vBand);
            return denomPart * numer * H;
        }
        case CoeffRoute::LemmaComposition: {
            // Specialization lemma: W at the cumulative layering equals
            // the source triple times the enlarged contraction; the
            // enlargement lemma then strips the v^N block.
            const Rat w = weightW(flavor, qh, cumulativeLayers(uFam, N - 1),
                                  concatFamilies(vFam), blockColoring(vFam));
            const Rat K = checkedDiv(w, sourceTriple(flavor, qh, uFam));
            Rat strip(1);
            for (int j = 1; j <= N - 1; ++j) {
                strip *= crossFactor(flavor, qh,
                                     uFam[static_cast<std::size_t>(j - 1)], vN);
            }
            const Rat H = checkedDiv(K, strip);
            return denomPart * numer * H;
        }
    }
    throw InvalidArgError("unknown coefficient route");
}

std::map<ColorTuple, SparseState> rhsCommutation(
    RFlavor flavor, const Rat& qh, const std::vector<std::vector<Rat>>& uFam,
    const std::vector<Rat>& xi, CoeffRoute route) {
    const int N = static_cast<int>(uFam.size());
    MonodromyContext<Rat> ctx{flavor, N, qh, xi};
    std::vector<int> sizes;
    for (const auto& f : uFam) {
        sizes.push_back(static_cast<int>(f.size()));
    }
    std::map<ColorTuple, SparseState> acc;
    for (const ColorTuple& key : allColorTuples(N, ctx.sites())) {
        acc.emplace(key, SparseState(N, ctx.sites()));
    }
    for (const auto& vFam : enumeratePartitions(uFam, sizes)) {
        const Rat c = commutationCoefficient(flavor, qh, uFam, vFam, route);
        if (c.isZero()) {
            continue;
        }
        OperatorWord<Rat> word;
        for (int j = N; j >= 1; --j) {
            word.push_back(
                WordFactor<Rat>{N, j, vFam[static_cast<std::size_t>(j - 1)]});
        }
        for (const ColorTuple& key : allColorTuples(N, ctx.sites())) {
            SparseState term =
                applyWord(ctx, word, basisState<Rat>(N, key));
            term *= c;
            acc.at(key) += term;
        }
    }
    return acc;
}

namespace {

bool verifyCommutationWithRoute(RFlavor flavor, const Rat& qh,
                                const std::vector<std::vector<Rat>>& uFam,
                                const std::vector<Rat>& xi, CoeffRoute route) {
    const int N = static_cast<int>(uFam.size());
    MonodromyContext<Rat> ctx{flavor, N, qh, xi};
    OperatorWord<Rat> lhsWord;
    for (int j = 1; j <= N; ++j) {
        lhsWord.push_back(
            WordFactor<Rat>{N, j, uFam[static_cast<std::size_t>(j - 1)]});
    }
    const auto lhs = wordMatrix(ctx, lhsWord);
    const auto rhs = rhsCommutation(flavor, qh, uFam, xi, route);
    return lhs == rhs;
}

} // namespace

bool verifyTheoremCommutation(RFlavor flavor, const Rat& qh,
                              const std::vector<std::vector<Rat>>& uFam,
                              const std::vector<Rat>& xi) {
    return verifyCommutationWithRoute(flavor, qh, uFam, xi,
                                      CoeffRoute::WeightFunction);
}

bool verifyPropCommutation(RFlavor flavor, const Rat& qh,
                           const std::vector<std::vector<Rat>>& uFam,
                           const std::vector<Rat>& xi) {
    return verifyCommutationWithRoute(flavor, qh, uFam, xi,
                                      CoeffRoute::BandContraction);
}

bool verifyRankOneIKForm(RFlavor flavor, const Rat& qh,
                         const std::vector<Rat>& u1, const std::vector<Rat>& u2,
                         const std::vector<Rat>& xi) {
    MonodromyContext<Rat> ctx{flavor, 2, qh, xi};
    OperatorWord<Rat> lhsWord{WordFactor<Rat>{2, 1, u1},
                              WordFactor<Rat>{2, 2, u2}};
    const auto lhs = wordMatrix(ctx, lhsWord);
    std::map<ColorTuple, SparseState> rhs;
    for (const ColorTuple& key : allColorTuples(2, ctx.sites())) {
        rhs.emplace(key, SparseState(2, ctx.sites()));
    }
    const std::vector<int> sizes{static_cast<int>(u1.size()),
                                 static_cast<int>(u2.size())};
    for (const auto& vFam : enumeratePartitions({u1, u2}, sizes)) {
        const auto& v1 = vFam[0];
        const auto& v2 = vFam[1];
        Rat den = setDiff(v2, v1) * crossFactor(flavor, qh, v1, v1);
        const Rat num = crossFactor(flavor, qh, u2, v1);
        Rat c = checkedDiv(num, den);
        c *= ikDeterminant(flavor, qh, u1, v1);
        if (c.isZero()) {
            continue;
        }
        OperatorWord<Rat> word{WordFactor<Rat>{2, 2, v2},
                               WordFactor<Rat>{2, 1, v1}};
        for (const ColorTuple& key : allColorTuples(2, ctx.sites())) {
            SparseState term = applyWord(ctx, word, basisState<Rat>(2, key));
            term *= c;
            rhs.at(key) += term;
        }
    }
    return lhs == rhs;
}

bool verifyEnlargementLemma(RFlavor flavor, const Rat& qh,
                            const std::vector<std::vector<Rat>>& uFam,
                            const std::vector<std::vector<Rat>>& vFamPlus) {
    if (vFamPlus.size() != uFam.size() + 1) {
        throw InvalidArgError("enlargement lemma: family count mismatch");
    }
    const auto& vN = vFamPlus.back();
    Rat strip(1);
    for (const auto& uj : uFam) {
        strip *= crossFactor(flavor, qh, uj, vN);
    }
    const std::vector<std::vector<Rat>> vBand(vFamPlus.begin(),
                                              vFamPlus.end() - 1);
    return gridK(flavor, qh, uFam, vFamPlus) ==
           strip * gridH(flavor, qh, uFam, vBand);
}

bool verifySpecializationLemma(RFlavor flavor, const Rat& qh,
                               const std::vector<std::vector<Rat>>& uFam,
                               const std::vector<std::vector<Rat>>& vFamPlus) {
    if (vFamPlus.size() != uFam.size() + 1) {
        throw InvalidArgError("specialization lemma: family count mismatch");
    }
    const int N = static_cast<int>(vFamPlus.size());
    std::vector<std::vector<Rat>> withLast = uFam;
    withLast.push_back(vFamPlus.back()); // block coloring needs all N sizes
    const Rat w = weightW(flavor, qh, cumulativeLayers(uFam, N - 1),
                          concatFamilies(vFamPlus), blockColoring(withLast));
    return w == sourceTriple(flavor, qh, withLast) *
                    gridK(flavor, qh, uFam, vFamPlus);
}

bool verifyColoredRelation(RFlavor flavor, const Rat& qh, int N,
                           const std::vector<Rat>& w, const ColorTuple& I) {
    const int n = static_cast<int>(w.size());
    if (static_cast<int>(I.size()) != n) {
        throw InvalidArgError("colored relation: coloring length mismatch");
    }
    std::vector<std::vector<Rat>> parts(static_cast<std::size_t>(N));
    for (int a = 0; a < n; ++a) {
        const int c = I[static_cast<std::size_t>(a)];
        if (c < 1 || c > N) {
            throw InvalidArgError("colored relation: color out of range");
        }
        parts[static_cast<std::size_t>(c - 1)].push_back(
            w[static_cast<std::size_t>(a)]);
    }
    const std::vector<std::vector<Rat>> wordParts(parts.begin(),
                                                  parts.end() - 1);
    // Layer j collects the values whose color is <= j, in list order.
    std::vector<std::vector<Rat>> layers;
    for (int j = 1; j <= N - 1; ++j) {
        std::vector<Rat> layer;
        for (int a = 0; a < n; ++a) {
            if (I[static_cast<std::size_t>(a)] <= j) {
                layer.push_back(w[static_cast<std::size_t>(a)]);
            }
        }
        layers.push_back(std::move(layer));
    }
    const Rat psi = psiLayered(flavor, qh, layers, w, I);
    return psi == sourceTriple(flavor, qh, parts) *
                      gridKColored(flavor, qh, N, wordParts, w, I);
}

} // namespace qbethe
