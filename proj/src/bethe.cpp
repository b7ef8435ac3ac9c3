#include "qbethe/bethe.hpp"

#include "qbethe/errors.hpp"
#include "qbethe/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace qbethe {

std::vector<Cell> cellsAtLevel(int N, int k) {
    if (N < 2 || k < 1 || k > N - 1) {
        throw InvalidArgError("cell level out of range");
    }
    std::vector<Cell> out;
    for (int i = 1; i <= k; ++i) {
        for (int j = k; j <= N - 1; ++j) {
            out.push_back(Cell(i, j));
        }
    }
    return out;
}

namespace {

constexpr int kLevelSizeCap = 3;

// All cells of the rank-N triangle, row-major.
std::vector<Cell> allCells(int N) {
    std::vector<Cell> out;
    for (int i = 1; i <= N - 1; ++i) {
        for (int j = i; j <= N - 1; ++j) {
            out.push_back(Cell(i, j));
        }
    }
    return out;
}

// All shared cell-size tables consistent with the level sizes.
std::vector<std::map<Cell, int>> cellSizeTables(
    int N, const std::vector<int>& levelSizes) {
    const std::vector<Cell> cells = allCells(N);
    std::vector<int> rem = levelSizes;
    std::map<Cell, int> current;
    std::vector<std::map<Cell, int>> out;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            for (int r : rem) {
                if (r != 0) {
                    return;
                }
            }
            out.push_back(current);
            return;
        }
        const Cell c = cells[idx];
        int maxM = kLevelSizeCap;
        for (int k = c.first; k <= c.second; ++k) {
            maxM = std::min(maxM, rem[static_cast<std::size_t>(k - 1)]);
        }
        for (int m = 0; m <= maxM; ++m) {
            current[c] = m;
            for (int k = c.first; k <= c.second; ++k) {
                rem[static_cast<std::size_t>(k - 1)] -= m;
            }
            rec(idx + 1);
            for (int k = c.first; k <= c.second; ++k) {
                rem[static_cast<std::size_t>(k - 1)] += m;
            }
        }
        current.erase(c);
    };
    rec(0);
    return out;
}

// Ascending size-k index combinations from `pool`, lexicographic.
void forEachCombinationOf(const std::vector<int>& pool, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == k) {
            fn(chosen);
            return;
        }
        const std::size_t missing =
            static_cast<std::size_t>(k) - chosen.size();
        for (std::size_t s = start; s + missing <= pool.size(); ++s) {
            chosen.push_back(pool[s]);
            rec(s + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

// Distributions of {0..total-1} over ordered slots with the given
// sizes; each slot receives an ascending index list, slots filled left
// to right with lexicographic combinations of the remaining pool.
std::vector<std::vector<std::vector<int>>> slotDistributions(
    int total, const std::vector<int>& sizes) {
    std::vector<int> pool(static_cast<std::size_t>(total));
    for (int t = 0; t < total; ++t) {
        pool[static_cast<std::size_t>(t)] = t;
    }
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    std::function<void(std::size_t, const std::vector<int>&)> rec =
        [&](std::size_t slot, const std::vector<int>& rest) {
            if (slot == sizes.size()) {
                if (rest.empty()) {
                    out.push_back(current);
                }
                return;
            }
            forEachCombinationOf(
                rest, sizes[slot], [&](const std::vector<int>& chosen) {
                    std::vector<int> next;
                    std::set_difference(rest.begin(), rest.end(),
                                        chosen.begin(), chosen.end(),
                                        std::back_inserter(next));
                    current.push_back(chosen);
                    rec(slot + 1, next);
                    current.pop_back();
                });
        };
    rec(0, pool);
    return out;
}

Rat powRat(const Rat& base, int e) {
    if (e < 0) {
        throw InvalidArgError("negative exponent");
    }
    Rat out(1);
    for (int k = 0; k < e; ++k) {
        out *= base;
    }
    return out;
}

// Pairwise product (a - b), (qa - q^{-1}b), or (a - b + h) over two
// lists, per flavor.
Rat crossList(RFlavor flavor, const Rat& qh, const std::vector<Rat>& A,
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

struct PolyFactor {
    int i;
    int j;
    std::vector<Rat> params;
};

// Applies a word of polynomial monodromy elements, listed leftmost
// first, the rightmost factor acting first.
SparseState applyPolyWord(const MonodromyContext<Rat>& ctx,
                          const std::vector<PolyFactor>& word,
                          SparseState st) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        for (const Rat& u : it->params) {
            st = applyElement(ctx, it->i, it->j, u, st);
        }
    }
    return st;
}

MonodromyContext<Rat> makeContext(RFlavor flavor, const Rat& qh, int N,
                                  const std::vector<Rat>& w) {
    MonodromyContext<Rat> ctx;
    ctx.flavor = flavor;
    ctx.N = N;
    ctx.qh = qh;
    ctx.xi = w;
    return ctx;
}

SparseState colorOneVacuum(int N, int n) {
    return basisState<Rat>(N, ColorTuple(static_cast<std::size_t>(n), 1));
}

SparseState colorNVacuum(int N, int n) {
    return basisState<Rat>(N, ColorTuple(static_cast<std::size_t>(n), N));
}

void requireTrig(RFlavor flavor, const char* what) {
    if (flavor == RFlavor::Rational) {
        throw InvalidArgError(std::string(what) +
                              " uses the trigonometric conventions");
    }
}

int permutationInversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) {
                ++inv;
            }
        }
    }
    return inv;
}

// Scalar proportionality test: image == mu * base for some mu,
// extracted from the first entry of base.  base must be nonzero.
bool proportionalTo(const SparseState& image, const SparseState& base,
                    Rat& mu) {
    if (base.isZero()) {
        return false;
    }
    const auto& [key, c] = *base.entries().begin();
    mu = image.coeff(key) / c;
    return image == base * mu;
}

} // namespace

std::vector<NestedPartition> enumerateNestedPartitions(
    int N, const std::vector<int>& levelSizes) {
    if (N < 2) {
        throw InvalidArgError("nested partitions need rank at least 2");
    }
    if (static_cast<int>(levelSizes.size()) != N - 1) {
        throw InvalidArgError("nested partitions need N-1 level sizes");
    }
    for (int s : levelSizes) {
        if (s < 0 || s > kLevelSizeCap) {
            throw InvalidArgError("nested partition level size out of range");
        }
    }
    std::vector<NestedPartition> out;
    for (const std::map<Cell, int>& table : cellSizeTables(N, levelSizes)) {
        // Per level, all index distributions for this size table.
        std::vector<std::vector<std::vector<std::vector<int>>>> perLevel;
        std::vector<std::vector<Cell>> levelCells;
        for (int k = 1; k <= N - 1; ++k) {
            levelCells.push_back(cellsAtLevel(N, k));
            std::vector<int> sizes;
            for (const Cell& c : levelCells.back()) {
                sizes.push_back(table.at(c));
            }
            perLevel.push_back(slotDistributions(
                levelSizes[static_cast<std::size_t>(k - 1)], sizes));
        }
        NestedPartition part;
        part.byLevel.resize(static_cast<std::size_t>(N - 1));
        std::function<void(int)> rec = [&](int k) {
            if (k > N - 1) {
                out.push_back(part);
                return;
            }
            const std::size_t ki = static_cast<std::size_t>(k - 1);
            for (const auto& dist : perLevel[ki]) {
                std::map<Cell, std::vector<int>> assignment;
                for (std::size_t s = 0; s < levelCells[ki].size(); ++s) {
                    assignment[levelCells[ki][s]] = dist[s];
                }
                part.byLevel[ki] = std::move(assignment);
                rec(k + 1);
            }
            part.byLevel[ki].clear();
        };
        rec(1);
    }
    return out;
}

void checkGTPartition(int N, int n, const GTPartition& parts) {
    if (static_cast<int>(parts.size()) != N) {
        throw InvalidArgError("index partition needs exactly N parts");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const std::vector<int>& part : parts) {
        for (int p : part) {
            if (p < 1 || p > n) {
                throw InvalidArgError("index partition entry out of range");
            }
            if (seen[static_cast<std::size_t>(p - 1)]) {
                throw InvalidArgError("index partition entry repeated");
            }
            seen[static_cast<std::size_t>(p - 1)] = true;
        }
    }
    for (bool s : seen) {
        if (!s) {
            throw InvalidArgError("index partition misses a site");
        }
    }
}

std::vector<GTPartition> allGTPartitions(int N, int n) {
    if (N < 1 || n < 0) {
        throw InvalidArgError("bad partition enumeration parameters");
    }
    std::vector<GTPartition> out;
    long long count = 1;
    for (int s = 0; s < n; ++s) {
        count *= N;
    }
    for (long long idx = 0; idx < count; ++idx) {
        GTPartition parts(static_cast<std::size_t>(N));
        long long rest = idx;
        for (int s = 1; s <= n; ++s) {
            const int color = static_cast<int>(rest % N) + 1;
            rest /= N;
            parts[static_cast<std::size_t>(color - 1)].push_back(s);
        }
        out.push_back(std::move(parts));
    }
    return out;
}

std::vector<Rat> partValues(const std::vector<Rat>& w,
                            const std::vector<int>& part) {
    std::vector<Rat> out;
    for (int p : part) {
        if (p < 1 || p > static_cast<int>(w.size())) {
            throw InvalidArgError("part position out of range");
        }
        out.push_back(w[static_cast<std::size_t>(p - 1)]);
    }
    return out;
}

std::vector<Rat> unionValues(const std::vector<Rat>& w, const GTPartition& parts,
                             int from, int to) {
    std::vector<Rat> out;
    for (int p = std::max(1, from);
         p <= std::min(to, static_cast<int>(parts.size())); ++p) {
        const std::vector<Rat> vals =
            partValues(w, parts[static_cast<std::size_t>(p - 1)]);
        out.insert(out.end(), vals.begin(), vals.end());
    }
    return out;
}

SparseState psiFirst(const Rat& q, int N, const GTPartition& I,
                     const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, I);
    if (N < 2) {
        throw InvalidArgError("specialized vector needs rank at least 2");
    }
    // At the specialization the nesting collapses to a single
    // configuration: the top-row cell (1, j) holds the values of part
    // j+1 at every level it belongs to.
    const auto V = [&](int p) {
        return partValues(w, I[static_cast<std::size_t>(p - 1)]);
    };
    Rat factor(1);
    // Plain differences between a level-k cell and an earlier
    // level-(k-1) cell.
    for (int k = 2; k <= N - 1; ++k) {
        for (int jp = k - 1; jp <= N - 1; ++jp) {
            for (int j = jp + 1; j <= N - 1; ++j) {
                factor *= setDiff(V(j + 1), V(jp + 1));
            }
        }
    }
    // Within-level symmetrization ratios, later cell first.
    for (int k = 1; k <= N - 1; ++k) {
        for (int j = k; j <= N - 1; ++j) {
            for (int jp = j + 1; jp <= N - 1; ++jp) {
                const Rat den = setDiff(V(jp + 1), V(j + 1));
                if (den.isZero()) {
                    throw DomainError(
                        "specialized vector at coinciding parameters");
                }
                factor *= setQDiff(q, V(jp + 1), V(j + 1)) / den;
            }
        }
    }
    // Cross-level q-differences and determinant kernels.
    for (int k = 2; k <= N - 1; ++k) {
        for (int j = k; j <= N - 1; ++j) {
            for (int jp = j + 1; jp <= N - 1; ++jp) {
                factor *= setQDiff(q, V(j + 1), V(jp + 1));
            }
        }
        for (int j = k; j <= N - 1; ++j) {
            factor *= ikLeft(q, V(j + 1), V(j + 1));
        }
    }
    const MonodromyContext<Rat> ctx = makeContext(RFlavor::TrigB, q, N, w);
    std::vector<PolyFactor> word;
    for (int j = N; j >= 2; --j) {
        word.push_back({1, j, V(j)});
    }
    return applyPolyWord(ctx, word, colorOneVacuum(N, n)) * factor;
}

SparseState psiFirstClosed(const Rat& q, int N, const GTPartition& I,
                           const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, I);
    const auto V = [&](int p) {
        return partValues(w, I[static_cast<std::size_t>(p - 1)]);
    };
    Rat pref(1);
    for (int j = 1; j <= N - 1; ++j) {
        for (int k = j + 1; k <= N - 1; ++k) {
            pref *= powRat(setQDiff(q, V(k + 1), V(j + 1)), j);
            pref *= powRat(setQDiff(q, V(j + 1), V(k + 1)), j - 1);
        }
    }
    for (int j = 2; j <= N - 1; ++j) {
        pref *= powRat(setQDiff(q, V(j + 1), V(j + 1)), j - 1);
    }
    const MonodromyContext<Rat> ctx = makeContext(RFlavor::TrigB, q, N, w);
    std::vector<PolyFactor> word;
    for (int j = N; j >= 2; --j) {
        word.push_back({1, j, V(j)});
    }
    return applyPolyWord(ctx, word, colorOneVacuum(N, n)) * pref;
}

SparseState psiSecondClosed(const Rat& q, int N, const GTPartition& I,
                            const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, I);
    Rat pref(1);
    for (int j = 2; j <= N - 1; ++j) {
        const Rat den =
            setDiff(unionValues(w, I, j + 1, N), unionValues(w, I, 1, j - 1));
        if (den.isZero()) {
            throw DomainError("specialized vector at coinciding parameters");
        }
        pref /= den;
    }
    const MonodromyContext<Rat> ctx = makeContext(RFlavor::TrigB, q, N, w);
    std::vector<PolyFactor> word;
    for (int j = N; j >= 2; --j) {
        word.push_back({j - 1, j, unionValues(w, I, j, N)});
    }
    return applyPolyWord(ctx, word, colorOneVacuum(N, n)) * pref;
}

SparseState psiViaLimit(BetheVariant variant, const Rat& q, int N,
                        const GTPartition& I, const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, I);
    if (N < 2) {
        throw InvalidArgError("specialized vector needs rank at least 2");
    }
    // Perturb every level slot along a generic line in a formal
    // parameter, evaluate exactly as rational functions, and read off
    // the value at the origin.
    std::vector<std::vector<RationalFn>> tl;
    long long delta = 1;
    for (int k = 1; k <= N - 1; ++k) {
        std::vector<RationalFn> lvl;
        for (const Rat& v : unionValues(w, I, k + 1, N)) {
            lvl.push_back(RationalFn(Poly::linear(v, Rat(delta++)), Poly(1)));
        }
        tl.push_back(std::move(lvl));
    }
    std::vector<RationalFn> wfn;
    for (const Rat& v : w) {
        wfn.push_back(RationalFn(v));
    }
    RationalFn pref = setDiff(tl[0], wfn);
    for (int l = 2; l <= N - 1; ++l) {
        pref *= setDiff(tl[static_cast<std::size_t>(l - 1)],
                        tl[static_cast<std::size_t>(l - 2)]);
    }
    SparseStateT<RationalFn> vec =
        universalBetheVector(variant, RationalFn(q), tl, wfn);
    vec *= pref;
    SparseState out(N, n);
    for (const auto& [key, c] : vec.entries()) {
        out.add(key, c.atZero());
    }
    return out;
}

SparseState gtVectorChain(RFlavor flavor, const Rat& qh, int N,
                          const GTPartition& J, const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, J);
    if (flavor == RFlavor::TrigB) {
        throw InvalidArgError("chain vector uses convention A or rational");
    }
    const MonodromyContext<Rat> ctx = makeContext(flavor, qh, N, w);
    std::vector<PolyFactor> word;
    for (int j = 2; j <= N; ++j) {
        word.push_back({j, j - 1, unionValues(w, J, 1, j - 1)});
    }
    return applyPolyWord(ctx, word, colorNVacuum(N, n));
}

SparseState gtVectorProduct(RFlavor flavor, const Rat& qh, int N,
                            const GTPartition& J, const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, J);
    if (flavor == RFlavor::TrigB) {
        throw InvalidArgError("product vector uses convention A or rational");
    }
    const MonodromyContext<Rat> ctx = makeContext(flavor, qh, N, w);
    std::vector<PolyFactor> word;
    for (int j = 1; j <= N - 1; ++j) {
        word.push_back({N, j, partValues(w, J[static_cast<std::size_t>(j - 1)])});
    }
    return applyPolyWord(ctx, word, colorNVacuum(N, n));
}

Rat gtProportionality(RFlavor flavor, const Rat& qh, int N,
                      const GTPartition& J, const std::vector<Rat>& w) {
    checkGTPartition(N, static_cast<int>(w.size()), J);
    if (flavor == RFlavor::TrigB) {
        throw InvalidArgError("proportionality uses convention A or rational");
    }
    const auto V = [&](int p) {
        return partValues(w, J[static_cast<std::size_t>(p - 1)]);
    };
    Rat pref(1);
    for (int j = 2; j <= N - 1; ++j) {
        pref *= setDiff(unionValues(w, J, 1, j - 1), unionValues(w, J, j + 1, N));
    }
    for (int j = 1; j <= N - 1; ++j) {
        for (int k = j + 1; k <= N - 1; ++k) {
            pref *= powRat(crossList(flavor, qh, V(j), V(k)), N - k);
            pref *= powRat(crossList(flavor, qh, V(k), V(j)), N - k - 1);
        }
    }
    for (int j = 1; j <= N - 2; ++j) {
        pref *= powRat(crossList(flavor, qh, V(j), V(j)), N - j - 1);
    }
    return pref;
}

bool verifyGtProportionality(RFlavor flavor, const Rat& qh, int N,
                             const GTPartition& J, const std::vector<Rat>& w) {
    const SparseState lhs = gtVectorChain(flavor, qh, N, J, w);
    const SparseState rhs = gtVectorProduct(flavor, qh, N, J, w);
    return lhs == rhs * gtProportionality(flavor, qh, N, J, w);
}

SparseState gtVectorChainDual(RFlavor flavor, const Rat& qh, int N,
                              const GTPartition& I, const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, I);
    if (flavor == RFlavor::TrigA) {
        throw InvalidArgError("dual chain vector uses convention B or rational");
    }
    const MonodromyContext<Rat> ctx = makeContext(flavor, qh, N, w);
    std::vector<PolyFactor> word;
    for (int j = N; j >= 2; --j) {
        word.push_back({j - 1, j, unionValues(w, I, j, N)});
    }
    return applyPolyWord(ctx, word, colorOneVacuum(N, n));
}

SparseState gtVectorProductDual(RFlavor flavor, const Rat& qh, int N,
                                const GTPartition& I,
                                const std::vector<Rat>& w) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, I);
    if (flavor == RFlavor::TrigA) {
        throw InvalidArgError(
            "dual product vector uses convention B or rational");
    }
    const MonodromyContext<Rat> ctx = makeContext(flavor, qh, N, w);
    std::vector<PolyFactor> word;
    for (int j = N; j >= 2; --j) {
        word.push_back({1, j, partValues(w, I[static_cast<std::size_t>(j - 1)])});
    }
    return applyPolyWord(ctx, word, colorOneVacuum(N, n));
}

Rat gtProportionalityDual(RFlavor flavor, const Rat& qh, int N,
                          const GTPartition& I, const std::vector<Rat>& w) {
    checkGTPartition(N, static_cast<int>(w.size()), I);
    if (flavor == RFlavor::TrigA) {
        throw InvalidArgError(
            "dual proportionality uses convention B or rational");
    }
    const auto V = [&](int p) {
        return partValues(w, I[static_cast<std::size_t>(p - 1)]);
    };
    Rat pref(1);
    for (int j = 2; j <= N - 1; ++j) {
        pref *= setDiff(unionValues(w, I, j + 1, N), unionValues(w, I, 1, j - 1));
    }
    for (int j = 1; j <= N - 1; ++j) {
        for (int k = j + 1; k <= N - 1; ++k) {
            pref *= powRat(crossList(flavor, qh, V(k + 1), V(j + 1)), j);
            pref *= powRat(crossList(flavor, qh, V(j + 1), V(k + 1)), j - 1);
        }
    }
    for (int j = 2; j <= N - 1; ++j) {
        pref *= powRat(crossList(flavor, qh, V(j + 1), V(j + 1)), j - 1);
    }
    return pref;
}

bool verifyGtProportionalityDual(RFlavor flavor, const Rat& qh, int N,
                                 const GTPartition& I,
                                 const std::vector<Rat>& w) {
    const SparseState lhs = gtVectorChainDual(flavor, qh, N, I, w);
    const SparseState rhs = gtVectorProductDual(flavor, qh, N, I, w);
    return lhs == rhs * gtProportionalityDual(flavor, qh, N, I, w);
}

SparseState quantumMinorApply(const MonodromyContext<Rat>& ctx,
                              const std::vector<int>& rows,
                              const std::vector<int>& cols, const Rat& u,
                              const SparseState& state) {
    requireTrig(ctx.flavor, "quantum minor");
    const int r = static_cast<int>(rows.size());
    if (r < 1 || static_cast<int>(cols.size()) != r) {
        throw InvalidArgError("quantum minor needs equal nonempty index lists");
    }
    for (int m = 0; m < r; ++m) {
        if (rows[static_cast<std::size_t>(m)] < 1 ||
            rows[static_cast<std::size_t>(m)] > ctx.N ||
            cols[static_cast<std::size_t>(m)] < 1 ||
            cols[static_cast<std::size_t>(m)] > ctx.N) {
            throw InvalidArgError("quantum minor index out of range");
        }
        if (m > 0 && cols[static_cast<std::size_t>(m)] <=
                         cols[static_cast<std::size_t>(m - 1)]) {
            throw InvalidArgError(
                "quantum minor needs strictly increasing column indices");
        }
    }
    const Rat q = ctx.qh;
    std::vector<Rat> shifted(static_cast<std::size_t>(r));
    for (int m = 1; m <= r; ++m) {
        shifted[static_cast<std::size_t>(m - 1)] = powRat(q, 2 * (m - 1)) * u;
    }
    const Rat negQInv = (-q).inverse();
    SparseState acc(ctx.N, state.sites());
    forEachPermutation(r, [&](const std::vector<int>& perm) {
        const Rat coeff = powRat(negQInv, permutationInversions(perm));
        SparseState st = state;
        for (int m = 1; m <= r; ++m) {
            st = applyElement(
                ctx, rows[static_cast<std::size_t>(m - 1)],
                cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(m - 1)])],
                shifted[static_cast<std::size_t>(m - 1)], st);
        }
        acc += st * coeff;
    });
    return acc;
}

SparseState qdetApply(const MonodromyContext<Rat>& ctx, int j, const Rat& u,
                      const SparseState& state) {
    if (j < 1 || j > ctx.N) {
        throw InvalidArgError("principal block size out of range");
    }
    std::vector<int> idx(static_cast<std::size_t>(j));
    for (int m = 1; m <= j; ++m) {
        idx[static_cast<std::size_t>(m - 1)] = m;
    }
    return quantumMinorApply(ctx, idx, idx, u, state);
}

Rat gtEigenvalue(const Rat& q, const std::vector<Rat>& w, const GTPartition& J,
                 int j, int k, const Rat& u) {
    const int N = static_cast<int>(J.size());
    checkGTPartition(N, static_cast<int>(w.size()), J);
    if (k < 1 || j < k || j > N) {
        throw InvalidArgError("eigenvalue factor index out of range");
    }
    if (k < j) {
        Rat out(1);
        for (const Rat& x : w) {
            out *= u - x;
        }
        return out;
    }
    Rat out(1);
    for (const Rat& x : unionValues(w, J, j + 1, N)) {
        out *= u - x;
    }
    const Rat qi = q.inverse();
    for (const Rat& x : unionValues(w, J, 1, j)) {
        out *= q * u - qi * x;
    }
    return out;
}

bool verifyQdetDiagonalization(const Rat& q, int N, const GTPartition& J,
                               const std::vector<Rat>& w, const Rat& u,
                               bool chainConstruction) {
    const MonodromyContext<Rat> ctx = makeContext(RFlavor::TrigA, q, N, w);
    const SparseState xi = chainConstruction
                               ? gtVectorChain(RFlavor::TrigA, q, N, J, w)
                               : gtVectorProduct(RFlavor::TrigA, q, N, J, w);
    if (xi.isZero()) {
        return false;
    }
    for (int j = 1; j <= N; ++j) {
        const SparseState lhs = qdetApply(ctx, j, u, xi);
        Rat eig(1);
        for (int k = 1; k <= j; ++k) {
            eig *= gtEigenvalue(q, w, J, j, k, powRat(q, 2 * (k - 1)) * u);
        }
        if (lhs != xi * eig) {
            return false;
        }
    }
    return true;
}

bool verifyMinorElementCommute(const MonodromyContext<Rat>& ctx,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols, int m,
                               const Rat& u, const Rat& v,
                               const SparseState& state) {
    if (m < 0 || m >= static_cast<int>(rows.size())) {
        throw InvalidArgError("minor element position out of range");
    }
    const int i = rows[static_cast<std::size_t>(m)];
    const int j = cols[static_cast<std::size_t>(m)];
    const SparseState first =
        quantumMinorApply(ctx, rows, cols, u, applyElement(ctx, i, j, v, state));
    const SparseState second =
        applyElement(ctx, i, j, v, quantumMinorApply(ctx, rows, cols, u, state));
    return first == second;
}

SingularStepResult singularVectorStep(const MonodromyContext<Rat>& ctx,
                                      const SparseState& eta, int k,
                                      const Rat& alpha, const Rat& u) {
    requireTrig(ctx.flavor, "singular vector step");
    if (k < 1 || k >= ctx.N) {
        throw InvalidArgError("singular vector block index out of range");
    }
    if (u == alpha) {
        throw DomainError("singular vector step needs u distinct from alpha");
    }
    SingularStepResult res;
    if (eta.isZero()) {
        return res;
    }
    std::vector<Rat> mu(static_cast<std::size_t>(k));
    bool pre = true;
    for (int a = 1; a <= k && pre; ++a) {
        for (int b = a + 1; b <= k && pre; ++b) {
            pre = applyElement(ctx, a, b, u, eta).isZero();
        }
    }
    for (int a = 1; a <= k && pre; ++a) {
        pre = proportionalTo(applyElement(ctx, a, a, u, eta), eta,
                             mu[static_cast<std::size_t>(a - 1)]);
    }
    if (pre) {
        pre = applyElement(ctx, k, k, alpha, eta).isZero();
    }
    res.preconditionHeld = pre;
    if (!pre) {
        return res;
    }
    const SparseState etaP = applyElement(ctx, k + 1, k, alpha, eta);
    res.resultNonzero = !etaP.isZero();
    if (etaP.isZero()) {
        res.conclusionHeld = true;
        return res;
    }
    bool post = true;
    for (int a = 1; a <= k && post; ++a) {
        for (int b = a + 1; b <= k && post; ++b) {
            post = applyElement(ctx, a, b, u, etaP).isZero();
        }
    }
    for (int a = 1; a <= k - 1 && post; ++a) {
        post = applyElement(ctx, a, a, u, etaP) ==
               etaP * mu[static_cast<std::size_t>(a - 1)];
    }
    if (post) {
        const Rat f =
            (ctx.qh * u - ctx.qh.inverse() * alpha) / (u - alpha);
        post = applyElement(ctx, k, k, u, etaP) ==
               etaP * (f * mu[static_cast<std::size_t>(k - 1)]);
    }
    res.conclusionHeld = post;
    return res;
}

bool verifySingularLadder(const Rat& q, int N, const GTPartition& J,
                          const std::vector<Rat>& w, const Rat& u) {
    const int n = static_cast<int>(w.size());
    checkGTPartition(N, n, J);
    const MonodromyContext<Rat> ctx = makeContext(RFlavor::TrigA, q, N, w);
    SparseState current = colorNVacuum(N, n);
    for (int j = N - 1; j >= 1; --j) {
        current =
            applyMultiset(ctx, j + 1, j, unionValues(w, J, 1, j), current);
        if (current.isZero()) {
            return false;
        }
        // The suffix starting at T_{j+1,j} is singular for the leading
        // j-by-j block, with the row-j lambda weights.
        for (int a = 1; a <= j; ++a) {
            for (int b = a + 1; b <= j; ++b) {
                if (!applyElement(ctx, a, b, u, current).isZero()) {
                    return false;
                }
            }
        }
        for (int a = 1; a <= j; ++a) {
            if (applyElement(ctx, a, a, u, current) !=
                current * gtEigenvalue(q, w, J, j, a, u)) {
                return false;
            }
        }
    }
    return current == gtVectorChain(RFlavor::TrigA, q, N, J, w);
}

bool verifyGtIndependence(const Rat& q, int N, int n,
                          const std::vector<Rat>& w, bool chainConstruction) {
    if (static_cast<int>(w.size()) != n) {
        throw InvalidArgError("inhomogeneity count mismatch");
    }
    // Group the index partitions by color profile.
    std::map<std::vector<int>, std::vector<GTPartition>> groups;
    for (const GTPartition& J : allGTPartitions(N, n)) {
        std::vector<int> profile;
        for (const std::vector<int>& part : J) {
            profile.push_back(static_cast<int>(part.size()));
        }
        groups[profile].push_back(J);
    }
    for (const auto& [profile, parts] : groups) {
        // Weight-space basis: color words with this content.
        std::vector<ColorTuple> keys;
        for (const ColorTuple& key : allColorTuples(N, n)) {
            std::vector<int> content(static_cast<std::size_t>(N), 0);
            for (int c : key) {
                ++content[static_cast<std::size_t>(c - 1)];
            }
            if (content == profile) {
                keys.push_back(key);
            }
        }
        if (keys.size() != parts.size()) {
            return false;
        }
        std::vector<std::vector<Rat>> matrix;
        for (const GTPartition& J : parts) {
            const SparseState vec =
                chainConstruction
                    ? gtVectorChain(RFlavor::TrigA, q, N, J, w)
                    : gtVectorProduct(RFlavor::TrigA, q, N, J, w);
            std::vector<Rat> row;
            for (const ColorTuple& key : keys) {
                row.push_back(vec.coeff(key));
            }
            // Support must stay inside the weight space.
            std::size_t support = 0;
            for (const Rat& c : row) {
                if (!c.isZero()) {
                    ++support;
                }
            }
            if (support != vec.entries().size()) {
                return false;
            }
            matrix.push_back(std::move(row));
        }
        if (determinant(matrix).isZero()) {
            return false;
        }
    }
    return true;
}

} // namespace qbethe
