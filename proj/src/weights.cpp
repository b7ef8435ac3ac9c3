#include "qbethe/weights.hpp"

#include <algorithm>
#include <numeric>

namespace qbethe {

Rat fFunction(RFlavor flavor, const Rat& qh, const Rat& u, const Rat& v) {
    const Rat den = u - v;
    if (den.isZero()) {
        throw DomainError("f evaluated at coinciding arguments");
    }
    switch (flavor) {
        case RFlavor::TrigA:
        case RFlavor::TrigB:
            return (qh * u - qh.inverse() * v) / den;
        case RFlavor::Rational:
            return (u - v + qh) / den;
    }
    throw InvalidArgError("unknown flavor");
}

Rat ikDeterminant(RFlavor flavor, const Rat& qh, const std::vector<Rat>& u,
                  const std::vector<Rat>& v) {
    switch (flavor) {
        case RFlavor::TrigA:
        case RFlavor::TrigB:
            return ikLeft(qh, u, v);
        case RFlavor::Rational:
            return ikRational(qh, u, v);
    }
    throw InvalidArgError("unknown flavor");
}

void forEachPermutation(
    int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0) {
        throw InvalidArgError("negative permutation degree");
    }
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

// Positions (1-based) of entries of I with color <= p, in order.
std::vector<int> colorPositions(const ColorTuple& I, int p) {
    std::vector<int> out;
    for (std::size_t a = 0; a < I.size(); ++a) {
        if (I[a] <= p) {
            out.push_back(static_cast<int>(a + 1));
        }
    }
    return out;
}

struct WeightKernels {
    // Multiplier attached to the turning point.
    std::function<Rat(const Rat&)> turn;
    // Factor for sites left of the turning point.
    std::function<Rat(const Rat&, const Rat&)> before;
    // Factor for sites right of the turning point.
    std::function<Rat(const Rat&, const Rat&)> after;
    // Numerator of the in-layer symmetrization ratio.
    std::function<Rat(const Rat&, const Rat&)> pairNum;
};

WeightKernels makeKernels(RFlavor flavor, const Rat& qh) {
    WeightKernels k;
    switch (flavor) {
        case RFlavor::TrigA:
        case RFlavor::TrigB: {
            const Rat q = qh;
            const Rat qi = q.inverse();
            k.turn = [q, qi](const Rat& x) { return (q - qi) * x; };
            k.before = [](const Rat& x, const Rat& y) { return x - y; };
            k.after = [q, qi](const Rat& x, const Rat& y) {
                return q * x - qi * y;
            };
            k.pairNum = [q, qi](const Rat& x, const Rat& y) {
                return qi * x - q * y;
            };
            break;
        }
        case RFlavor::Rational: {
            const Rat h = qh;
            k.turn = [h](const Rat&) { return h; };
            k.before = [](const Rat& x, const Rat& y) { return x - y; };
            k.after = [h](const Rat& x, const Rat& y) { return x - y + h; };
            k.pairNum = [h](const Rat& x, const Rat& y) { return x - y - h; };
            break;
        }
    }
    return k;
}

} // namespace

Rat weightW(RFlavor flavor, const Rat& qh,
            const std::vector<std::vector<Rat>>& layers,
            const std::vector<Rat>& v, const ColorTuple& I) {
    const int numLayers = static_cast<int>(layers.size());
    const int N = numLayers + 1;
    const int L = static_cast<int>(v.size());
    if (static_cast<int>(I.size()) != L) {
        throw InvalidArgError("weight function: coloring length mismatch");
    }
    for (int c : I) {
        if (c < 1 || c > N) {
            throw InvalidArgError("weight function: color out of range");
        }
    }
    std::vector<std::vector<int>> positions; // I^p for p = 1..N-1
    for (int p = 1; p <= numLayers; ++p) {
        positions.push_back(colorPositions(I, p));
        if (positions.back().size() != layers[static_cast<std::size_t>(p - 1)].size()) {
            throw InvalidArgError("weight function: layer size mismatch");
        }
    }
    // Relative positions of layer p's color set inside layer p+1's.
    std::vector<std::vector<int>> rel; // p = 1..N-2
    for (int p = 1; p <= numLayers - 1; ++p) {
        rel.push_back(relabelSubset(positions[static_cast<std::size_t>(p)],
                                    positions[static_cast<std::size_t>(p - 1)]));
    }
    const WeightKernels ker = makeKernels(flavor, qh);

    // Fold the nested permutation sum layer by layer, innermost last.
    std::vector<std::vector<int>> sigma(static_cast<std::size_t>(numLayers));
    Rat total(0);
    std::function<void(int)> recurse = [&](int p) {
        const std::size_t pi = static_cast<std::size_t>(p - 1);
        if (p > numLayers) {
            // One fully chosen tuple of permutations: assemble the term.
            Rat term(1);
            for (int layer = 1; layer <= numLayers; ++layer) {
                const std::size_t li = static_cast<std::size_t>(layer - 1);
                const auto& us = layers[li];
                const auto& sg = sigma[li];
                const int kp = static_cast<int>(us.size());
                const bool top = layer == numLayers;
                const int kNext =
                    top ? L : static_cast<int>(layers[li + 1].size());
                for (int a = 0; a < kp; ++a) {
                    const Rat& x = us[static_cast<std::size_t>(sg[static_cast<std::size_t>(a)])];
                    const int pos =
                        top ? positions[li][static_cast<std::size_t>(a)]
                            : rel[li][static_cast<std::size_t>(a)];
                    for (int i = 1; i < pos; ++i) {
                        const Rat& y =
                            top ? v[static_cast<std::size_t>(i - 1)]
                                : layers[li + 1][static_cast<std::size_t>(
                                      sigma[li + 1][static_cast<std::size_t>(i - 1)])];
                        term *= ker.before(x, y);
                    }
                    term *= ker.turn(x);
                    for (int i = pos + 1; i <= kNext; ++i) {
                        const Rat& y =
                            top ? v[static_cast<std::size_t>(i - 1)]
                                : layers[li + 1][static_cast<std::size_t>(
                                      sigma[li + 1][static_cast<std::size_t>(i - 1)])];
                        term *= ker.after(x, y);
                    }
                }
                for (int a = 0; a < kp; ++a) {
                    for (int b = a + 1; b < kp; ++b) {
                        const Rat& xa = us[static_cast<std::size_t>(sg[static_cast<std::size_t>(a)])];
                        const Rat& xb = us[static_cast<std::size_t>(sg[static_cast<std::size_t>(b)])];
                        const Rat den = xa - xb;
                        if (den.isZero()) {
                            throw DomainError(
                                "weight function: coinciding layer parameters");
                        }
                        term *= ker.pairNum(xa, xb) / den;
                    }
                }
            }
            total += term;
            return;
        }
        forEachPermutation(
            static_cast<int>(layers[pi].size()), [&](const std::vector<int>& perm) {
                sigma[pi] = perm;
                recurse(p + 1);
            });
    };
    if (numLayers == 0) {
        return Rat(1);
    }
    recurse(1);
    return total;
}

} // namespace qbethe
