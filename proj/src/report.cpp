#include "qbethe/report.hpp"

#include "qbethe/bethe.hpp"
#include "qbethe/commutation.hpp"
#include "qbethe/degeneration.hpp"
#include "qbethe/grid.hpp"
#include "qbethe/monodromy.hpp"
#include "qbethe/state.hpp"
#include "qbethe/weights.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace qbethe {
namespace {

// ---------------------------------------------------------------------------
// Check harness
// ---------------------------------------------------------------------------

struct CheckSpec {
    std::string identity;
    std::string anchor;
    std::string flavor; // "trigA" | "trigB" | "rational" | "mixed"
    std::optional<int> rank;
    std::vector<int> sizes;
    std::optional<int> length;
    int fixedSamples = 0; // 0 = honor SuiteConfig::samples
    std::vector<Slot> slots;
    std::function<bool(const Assignment&)> predicate;
};

Slot paramSlot(RFlavor flavor) {
    return flavor == RFlavor::Rational ? Slot{"h", SlotKind::Integer}
                                       : Slot{"q", SlotKind::Ratio};
}

const Rat& paramOf(const Assignment& a, RFlavor flavor) {
    return flavor == RFlavor::Rational ? a.at("h") : a.at("q");
}

std::vector<Rat> listOf(const Assignment& a, const std::string& prefix,
                        int count) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        out.push_back(a.at(prefix + std::to_string(i)));
    }
    return out;
}

// Slots t<f>_1 .. t<f>_{sizes[f-1]} for each family f.
std::vector<Slot> famSlots(const std::string& prefix,
                           const std::vector<int>& sizes) {
    std::vector<Slot> out;
    for (std::size_t f = 0; f < sizes.size(); ++f) {
        for (int i = 1; i <= sizes[f]; ++i) {
            out.push_back(Slot{prefix + std::to_string(f + 1) + "_" +
                                   std::to_string(i),
                               SlotKind::Integer});
        }
    }
    return out;
}

std::vector<std::vector<Rat>> famOf(const Assignment& a,
                                    const std::string& prefix,
                                    const std::vector<int>& sizes) {
    std::vector<std::vector<Rat>> out;
    out.reserve(sizes.size());
    for (std::size_t f = 0; f < sizes.size(); ++f) {
        std::vector<Rat> fam;
        fam.reserve(static_cast<std::size_t>(sizes[f]));
        for (int i = 1; i <= sizes[f]; ++i) {
            fam.push_back(a.at(prefix + std::to_string(f + 1) + "_" +
                               std::to_string(i)));
        }
        out.push_back(std::move(fam));
    }
    return out;
}

// Sampled integers double as index choices: reduce the (possibly
// negative) integer value into 0..modulus-1.
long long slotInt(const Rat& value) {
    const std::string s = value.toString();
    return std::strtoll(s.c_str(), nullptr, 10);
}

int modIndex(const Rat& value, int modulus) {
    long long m = slotInt(value) % modulus;
    if (m < 0) {
        m += modulus;
    }
    return static_cast<int>(m);
}

std::string joinDigits(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) {
        out += std::to_string(x);
    }
    return out;
}

bool matchesFilters(const CheckSpec& check, const SuiteConfig& config) {
    if (config.flavorFilter &&
        check.flavor != flavorName(*config.flavorFilter)) {
        return false;
    }
    if (config.rankFilter && (!check.rank || *check.rank != *config.rankFilter)) {
        return false;
    }
    if (config.lengthFilter &&
        (!check.length || *check.length != *config.lengthFilter)) {
        return false;
    }
    if (config.sizesFilter && check.sizes != *config.sizesFilter) {
        return false;
    }
    return true;
}

VerificationReport runOne(const CheckSpec& check, const SuiteConfig& config) {
    VerificationReport rep;
    rep.identity = check.identity;
    rep.anchor = check.anchor;
    rep.flavor = check.flavor;
    rep.rank = check.rank;
    rep.sizes = check.sizes;
    rep.length = check.length;
    rep.seed = config.seed;
    if (!matchesFilters(check, config)) {
        rep.samples = 0;
        rep.status = "SKIPPED";
        return rep;
    }
    const int count = check.fixedSamples > 0 ? check.fixedSamples : config.samples;
    rep.samples = count;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const SampleCheck sc =
            verifyEqualAtSamples(config.seed, check.slots, count, check.predicate);
        rep.records.reserve(sc.points.size());
        for (std::size_t i = 0; i < sc.points.size(); ++i) {
            SampleRecord rec;
            rec.index = static_cast<int>(i);
            rec.point = sc.points[i];
            rec.equal = sc.pass || i + 1 < sc.points.size();
            rep.records.push_back(std::move(rec));
        }
        rep.status = sc.pass ? "PASS" : "FAIL";
        if (!sc.pass) {
            rep.counterexample = sc.counterexample;
        }
    } catch (const std::exception& e) {
        rep.status = "FAIL";
        rep.errorText = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.durationMs =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: rmatrix
// ---------------------------------------------------------------------------

void addRmatrixChecks(std::vector<CheckSpec>& checks) {
    for (RFlavor fl : {RFlavor::TrigA, RFlavor::TrigB, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        const std::string uniAnchor =
            fl == RFlavor::Rational
                ? "R12(u,v) R21(v,u) = (u - v + h)(v - u + h) id"
                : "R12(u,v) R21(v,u) = (q u - 1/q v)(q v - 1/q u) id";
        for (int N : {2, 3, 4}) {
            {
                CheckSpec s;
                s.identity = "rmatrix-ybe-" + fname + "-N" + std::to_string(N);
                s.anchor =
                    "R12(u1,u2) R13(u1,u3) R23(u2,u3) = "
                    "R23(u2,u3) R13(u1,u3) R12(u1,u2)";
                s.flavor = fname;
                s.rank = N;
                s.slots = {paramSlot(fl)};
                for (const Slot& extra : indexedSlots("u", 3)) {
                    s.slots.push_back(extra);
                }
                s.predicate = [fl, N](const Assignment& a) {
                    return checkYangBaxter(fl, N, paramOf(a, fl), a.at("u1"),
                                           a.at("u2"), a.at("u3"));
                };
                checks.push_back(std::move(s));
            }
            {
                CheckSpec s;
                s.identity =
                    "rmatrix-unitarity-" + fname + "-N" + std::to_string(N);
                s.anchor = uniAnchor;
                s.flavor = fname;
                s.rank = N;
                s.slots = {paramSlot(fl), Slot{"u", SlotKind::Integer},
                           Slot{"v", SlotKind::Integer}};
                s.predicate = [fl, N](const Assignment& a) {
                    return checkUnitarity(fl, N, paramOf(a, fl), a.at("u"),
                                          a.at("v"));
                };
                checks.push_back(std::move(s));
            }
        }
    }
    // Index flip between the two trigonometric conventions, on 100
    // random entry quadruples split across the three ranks.
    for (int N : {2, 3, 4}) {
        CheckSpec s;
        s.identity = "rmatrix-duality-N" + std::to_string(N);
        s.anchor =
            "Rt[ab->cd](u,v) = R[(N+1-a)(N+1-b)->(N+1-c)(N+1-d)](u,v)";
        s.flavor = "mixed";
        s.rank = N;
        s.fixedSamples = N == 2 ? 34 : 33;
        s.slots = {Slot{"q", SlotKind::Ratio}, Slot{"u", SlotKind::Integer},
                   Slot{"v", SlotKind::Integer}};
        for (const Slot& extra : indexedSlots("i", 4)) {
            s.slots.push_back(extra);
        }
        s.predicate = [N](const Assignment& a) {
            const int ia = 1 + modIndex(a.at("i1"), N);
            const int ib = 1 + modIndex(a.at("i2"), N);
            const int ic = 1 + modIndex(a.at("i3"), N);
            const int id = 1 + modIndex(a.at("i4"), N);
            return checkTrigDuality(N, a.at("q"), a.at("u"), a.at("v"), ia, ib,
                                    ic, id);
        };
        checks.push_back(std::move(s));
    }
}

// ---------------------------------------------------------------------------
// Suite: weightfn
// ---------------------------------------------------------------------------

// Colorings of length L with exactly k_p entries of color <= p.
std::vector<ColorTuple> coloringsForProfile(int N, int L,
                                            const std::vector<int>& k) {
    std::vector<ColorTuple> out;
    for (const ColorTuple& I : allColorTuples(N, L)) {
        bool ok = true;
        for (std::size_t p = 0; p + 1 < static_cast<std::size_t>(N); ++p) {
            int count = 0;
            for (int c : I) {
                if (c <= static_cast<int>(p) + 1) {
                    ++count;
                }
            }
            if (count != k[p]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(I);
        }
    }
    return out;
}

void addWeightfnChecks(std::vector<CheckSpec>& checks) {
    struct Instance {
        int N;
        std::vector<int> k;
        int L;
    };
    const std::vector<Instance> instances = {
        {2, {1}, 2},    {2, {2}, 3},    {2, {2}, 4},
        {3, {1, 1}, 2}, {3, {1, 2}, 3}, {3, {2, 2}, 4},
    };
    for (RFlavor fl : {RFlavor::TrigA, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        for (const Instance& inst : instances) {
            CheckSpec s;
            s.identity = "weightfn-psi-w-" + fname + "-N" +
                         std::to_string(inst.N) + "-k" + joinDigits(inst.k) +
                         "-L" + std::to_string(inst.L);
            s.anchor = "psi(t^1,..,t^{N-1} | v; I) = W_I(t^1,..,t^{N-1} | v)";
            s.flavor = fname;
            s.rank = inst.N;
            s.sizes = inst.k;
            s.length = inst.L;
            s.slots = {paramSlot(fl)};
            for (const Slot& extra : famSlots("t", inst.k)) {
                s.slots.push_back(extra);
            }
            for (const Slot& extra : indexedSlots("v", inst.L)) {
                s.slots.push_back(extra);
            }
            const int N = inst.N;
            const int L = inst.L;
            const std::vector<int> k = inst.k;
            s.predicate = [fl, N, L, k](const Assignment& a) {
                const auto layers = famOf(a, "t", k);
                const auto v = listOf(a, "v", L);
                for (const ColorTuple& I : coloringsForProfile(N, L, k)) {
                    if (psiLayered(fl, paramOf(a, fl), layers, v, I) !=
                        weightW(fl, paramOf(a, fl), layers, v, I)) {
                        return false;
                    }
                }
                return true;
            };
            checks.push_back(std::move(s));
        }
    }
}

// ---------------------------------------------------------------------------
// Suite: grid
// ---------------------------------------------------------------------------

void addGridChecks(std::vector<CheckSpec>& checks) {
    for (RFlavor fl : {RFlavor::TrigA, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        for (int n = 1; n <= 4; ++n) {
            CheckSpec s;
            s.identity = "grid-hk-" + fname + "-n" + std::to_string(n);
            s.anchor = "H_n(u | v) = K_n(u | v), the determinant form";
            s.flavor = fname;
            s.rank = 2;
            s.sizes = {n};
            s.length = n;
            s.slots = {paramSlot(fl)};
            for (const Slot& extra : indexedSlots("u", n)) {
                s.slots.push_back(extra);
            }
            for (const Slot& extra : indexedSlots("v", n)) {
                s.slots.push_back(extra);
            }
            s.predicate = [fl, n](const Assignment& a) {
                const auto u = listOf(a, "u", n);
                const auto v = listOf(a, "v", n);
                return domainWall(fl, paramOf(a, fl), u, v) ==
                       ikDeterminant(fl, paramOf(a, fl), u, v);
            };
            checks.push_back(std::move(s));
        }
    }
}

// ---------------------------------------------------------------------------
// Suite: commutation
// ---------------------------------------------------------------------------

void addCommutationChecks(std::vector<CheckSpec>& checks) {
    struct Instance {
        int N;
        std::vector<int> sizes;
    };
    const std::vector<Instance> instances = {
        {2, {1, 1}},    {2, {2, 1}},    {2, {2, 2}},
        {3, {1, 1, 1}}, {3, {2, 1, 1}},
    };
    for (RFlavor fl : {RFlavor::TrigA, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        for (const Instance& inst : instances) {
            const int total =
                std::accumulate(inst.sizes.begin(), inst.sizes.end(), 0);
            for (int n : {total, total + 1}) {
                CheckSpec s;
                s.identity = "commutation-matrix-" + fname + "-N" +
                             std::to_string(inst.N) + "-s" +
                             joinDigits(inst.sizes) + "-n" + std::to_string(n);
                s.anchor =
                    "T_N1(u^1)..T_N,N-1(u^{N-1}) = sum over repartitions v "
                    "of C(v|u) T_N,N-1(v^{N-1})..T_N1(v^1)";
                s.flavor = fname;
                s.rank = inst.N;
                s.sizes = inst.sizes;
                s.length = n;
                s.slots = {paramSlot(fl)};
                for (const Slot& extra : famSlots("u", inst.sizes)) {
                    s.slots.push_back(extra);
                }
                for (const Slot& extra : indexedSlots("xi", n)) {
                    s.slots.push_back(extra);
                }
                const std::vector<int> sizes = inst.sizes;
                s.predicate = [fl, sizes, n](const Assignment& a) {
                    return verifyTheoremCommutation(fl, paramOf(a, fl),
                                                    famOf(a, "u", sizes),
                                                    listOf(a, "xi", n));
                };
                checks.push_back(std::move(s));
            }
        }
    }
    // The three displays of the repartition coefficient as one scalar.
    for (RFlavor fl : {RFlavor::TrigA, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        for (const std::vector<int>& sizes :
             {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 1}}) {
            CheckSpec s;
            s.identity =
                "commutation-routes-" + fname + "-N3-s" + joinDigits(sizes);
            s.anchor =
                "C_weight(v|u) = C_band(v|u) = "
                "prod(enlargement prefactor) * C_specialized(v|u)";
            s.flavor = fname;
            s.rank = 3;
            s.sizes = sizes;
            s.slots = {paramSlot(fl)};
            for (const Slot& extra : famSlots("u", sizes)) {
                s.slots.push_back(extra);
            }
            for (const Slot& extra : famSlots("v", sizes)) {
                s.slots.push_back(extra);
            }
            s.predicate = [fl, sizes](const Assignment& a) {
                const auto u = famOf(a, "u", sizes);
                const auto v = famOf(a, "v", sizes);
                const Rat& p = paramOf(a, fl);
                const Rat byWeight = commutationCoefficient(
                    fl, p, u, v, CoeffRoute::WeightFunction);
                const Rat byBand = commutationCoefficient(
                    fl, p, u, v, CoeffRoute::BandContraction);
                const Rat byLemmas = commutationCoefficient(
                    fl, p, u, v, CoeffRoute::LemmaComposition);
                return byWeight == byBand && byBand == byLemmas;
            };
            checks.push_back(std::move(s));
        }
    }
}

// ---------------------------------------------------------------------------
// Suite: bethe-gt
// ---------------------------------------------------------------------------

std::vector<GTPartition> partitionsWithPartCap(int N, int n, int cap,
                                               bool requireNonempty) {
    std::vector<GTPartition> out;
    for (const GTPartition& J : allGTPartitions(N, n)) {
        bool ok = true;
        for (const auto& part : J) {
            if (static_cast<int>(part.size()) > cap ||
                (requireNonempty && part.empty())) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(J);
        }
    }
    return out;
}

void addBetheChecks(std::vector<CheckSpec>& checks, const SuiteConfig& config) {
    // Two constructions of the universal off-shell vector.
    for (int n1 = 0; n1 <= config.levelCap; ++n1) {
        for (int n2 = 0; n2 <= config.levelCap; ++n2) {
            CheckSpec s;
            s.identity = "bethe-universal-N3-p" + std::to_string(n1) +
                         std::to_string(n2);
            s.anchor = "B(t^1; t^2) = Bhat(t^1; t^2) as states";
            s.flavor = "trigB";
            s.rank = 3;
            s.sizes = {n1, n2};
            s.length = 3;
            s.slots = {Slot{"q", SlotKind::Ratio}};
            for (const Slot& extra : famSlots("t", {n1, n2})) {
                s.slots.push_back(extra);
            }
            for (const Slot& extra : indexedSlots("w", 3)) {
                s.slots.push_back(extra);
            }
            s.predicate = [n1, n2](const Assignment& a) {
                const auto t = famOf(a, "t", {n1, n2});
                const auto w = listOf(a, "w", 3);
                return universalBetheVector(BetheVariant::First, a.at("q"), t,
                                            w) ==
                       universalBetheVector(BetheVariant::Second, a.at("q"), t,
                                            w);
            };
            checks.push_back(std::move(s));
        }
    }
    // All evaluation routes of the specialized vectors.
    for (int n : {3, 4}) {
        CheckSpec s;
        s.identity = "bethe-psi-routes-N3-n" + std::to_string(n);
        s.anchor =
            "Psi(w;I) direct = limit(B) = limit(Bhat) = "
            "closed form 1 = closed form 2";
        s.flavor = "trigB";
        s.rank = 3;
        s.length = n;
        s.slots = {Slot{"q", SlotKind::Ratio}};
        for (const Slot& extra : indexedSlots("w", n)) {
            s.slots.push_back(extra);
        }
        const int partCap = config.partCap;
        s.predicate = [n, partCap](const Assignment& a) {
            const Rat& q = a.at("q");
            const auto w = listOf(a, "w", n);
            for (const GTPartition& I :
                 partitionsWithPartCap(3, n, partCap, true)) {
                const SparseState direct = psiFirst(q, 3, I, w);
                const SparseState closed1 = psiFirstClosed(q, 3, I, w);
                const SparseState closed2 = psiSecondClosed(q, 3, I, w);
                if (!(direct == closed1 && closed1 == closed2)) {
                    return false;
                }
                if (n <= 3) {
                    const SparseState lim1 =
                        psiViaLimit(BetheVariant::First, q, 3, I, w);
                    const SparseState lim2 =
                        psiViaLimit(BetheVariant::Second, q, 3, I, w);
                    if (!(lim1 == closed1 && lim2 == closed2)) {
                        return false;
                    }
                }
            }
            return true;
        };
        checks.push_back(std::move(s));
    }
    // Chain versus product tower vectors, both orientations.
    for (RFlavor fl : {RFlavor::TrigA, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        for (int n : {3, 4}) {
            CheckSpec s;
            s.identity = "bethe-gz-" + fname + "-N3-n" + std::to_string(n);
            s.anchor =
                "T_21(W_1) T_32(W_1 u W_2) .. |N..N> = "
                "P(J) T_N1(W_1) .. T_N,N-1(W_{N-1}) |N..N>";
            s.flavor = fname;
            s.rank = 3;
            s.length = n;
            s.slots = {paramSlot(fl)};
            for (const Slot& extra : indexedSlots("w", n)) {
                s.slots.push_back(extra);
            }
            const int partCap = config.partCap;
            s.predicate = [fl, n, partCap](const Assignment& a) {
                const auto w = listOf(a, "w", n);
                for (const GTPartition& J :
                     partitionsWithPartCap(3, n, partCap, false)) {
                    if (!verifyGtProportionality(fl, paramOf(a, fl), 3, J, w)) {
                        return false;
                    }
                }
                return true;
            };
            checks.push_back(std::move(s));
        }
    }
    for (RFlavor fl : {RFlavor::TrigB, RFlavor::Rational}) {
        const std::string fname = flavorName(fl);
        for (int n : {3, 4}) {
            CheckSpec s;
            s.identity =
                "bethe-gz-dual-" + fname + "-N3-n" + std::to_string(n);
            s.anchor =
                "T_N-1,N(W'_N) .. T_12(W'_2) |1..1> = "
                "P'(I) T_1N(W'_N) .. T_12(W'_2) |1..1>";
            s.flavor = fname;
            s.rank = 3;
            s.length = n;
            s.slots = {paramSlot(fl)};
            for (const Slot& extra : indexedSlots("w", n)) {
                s.slots.push_back(extra);
            }
            const int partCap = config.partCap;
            s.predicate = [fl, n, partCap](const Assignment& a) {
                const auto w = listOf(a, "w", n);
                for (const GTPartition& I :
                     partitionsWithPartCap(3, n, partCap, false)) {
                    if (!verifyGtProportionalityDual(fl, paramOf(a, fl), 3, I,
                                                     w)) {
                        return false;
                    }
                }
                return true;
            };
            checks.push_back(std::move(s));
        }
    }
    // Principal quantum determinants on the tower vectors.
    for (int N : {2, 3}) {
        CheckSpec s;
        s.identity = "bethe-qdet-N" + std::to_string(N);
        s.anchor =
            "qdet T^{(j)}(u) xi_J = prod_{k<=j} lambda_jk(q^{2k-2} u) xi_J";
        s.flavor = "trigA";
        s.rank = N;
        s.slots = {Slot{"q", SlotKind::Ratio}, Slot{"u", SlotKind::Integer}};
        for (const Slot& extra : indexedSlots("w", 3)) {
            s.slots.push_back(extra);
        }
        s.predicate = [N](const Assignment& a) {
            const Rat& q = a.at("q");
            const Rat& u = a.at("u");
            const auto w = listOf(a, "w", 3);
            for (int n = 1; n <= 3; ++n) {
                const std::vector<Rat> wSub(w.begin(), w.begin() + n);
                for (const GTPartition& J : allGTPartitions(N, n)) {
                    if (!verifyQdetDiagonalization(q, N, J, wSub, u, true) ||
                        !verifyQdetDiagonalization(q, N, J, wSub, u, false)) {
                        return false;
                    }
                }
            }
            return true;
        };
        checks.push_back(std::move(s));
    }
    // Quantum minors commute with their member elements on random
    // states; twenty trials split over the index variants.
    {
        CheckSpec s;
        s.identity = "bethe-minor-commute-N3";
        s.anchor = "[minor_rows,cols(u), T_rows[m],cols[m](v)] = 0";
        s.flavor = "trigA";
        s.rank = 3;
        s.length = 3;
        s.fixedSamples = 20;
        s.slots = {Slot{"q", SlotKind::Ratio}, Slot{"u", SlotKind::Integer},
                   Slot{"v", SlotKind::Integer}, Slot{"sel", SlotKind::Integer},
                   Slot{"c1", SlotKind::Integer}, Slot{"c2", SlotKind::Integer}};
        for (const Slot& extra : indexedSlots("w", 3)) {
            s.slots.push_back(extra);
        }
        for (const Slot& extra : indexedSlots("k", 3)) {
            s.slots.push_back(extra);
        }
        for (const Slot& extra : indexedSlots("m", 3)) {
            s.slots.push_back(extra);
        }
        s.predicate = [](const Assignment& a) {
            struct Variant {
                std::vector<int> rows, cols;
                int m;
            };
            static const std::vector<Variant> variants = {
                {{1, 2}, {1, 2}, 0},       {{1, 2}, {1, 2}, 1},
                {{1, 2}, {1, 3}, 0},       {{1, 2}, {1, 3}, 1},
                {{2, 3}, {1, 2}, 0},       {{1, 3}, {2, 3}, 1},
                {{1, 2, 3}, {1, 2, 3}, 0}, {{1, 2, 3}, {1, 2, 3}, 2},
            };
            const Variant& var =
                variants[static_cast<std::size_t>(modIndex(a.at("sel"), 8))];
            MonodromyContext<Rat> ctx;
            ctx.flavor = RFlavor::TrigA;
            ctx.N = 3;
            ctx.qh = a.at("q");
            ctx.xi = listOf(a, "w", 3);
            ColorTuple key1(3);
            ColorTuple key2(3);
            for (int i = 0; i < 3; ++i) {
                key1[static_cast<std::size_t>(i)] =
                    1 + modIndex(a.at("k" + std::to_string(i + 1)), 3);
                key2[static_cast<std::size_t>(i)] =
                    1 + modIndex(a.at("m" + std::to_string(i + 1)), 3);
            }
            SparseState state(3, 3);
            state.add(key1, a.at("c1"));
            state.add(key2, a.at("c2"));
            if (state.isZero()) {
                state.add(key1, Rat(1));
            }
            return verifyMinorElementCommute(ctx, var.rows, var.cols, var.m,
                                             a.at("u"), a.at("v"), state);
        };
        checks.push_back(std::move(s));
    }
    // Singular-vector lemma along the staircase suffixes.
    for (int N : {2, 3}) {
        CheckSpec s;
        s.identity = "bethe-singular-ladder-N" + std::to_string(N);
        s.anchor =
            "each staircase suffix is singular for its leading block "
            "with the lambda_j,a weights";
        s.flavor = "trigA";
        s.rank = N;
        s.length = 3;
        s.slots = {Slot{"q", SlotKind::Ratio}, Slot{"u", SlotKind::Integer}};
        for (const Slot& extra : indexedSlots("w", 3)) {
            s.slots.push_back(extra);
        }
        s.predicate = [N](const Assignment& a) {
            const auto w = listOf(a, "w", 3);
            for (const GTPartition& J : allGTPartitions(N, 3)) {
                if (!verifySingularLadder(a.at("q"), N, J, w, a.at("u"))) {
                    return false;
                }
            }
            return true;
        };
        checks.push_back(std::move(s));
    }
    // The tower vectors of one color profile span their weight space.
    for (int N : {2, 3}) {
        CheckSpec s;
        s.identity = "bethe-gt-independence-N" + std::to_string(N);
        s.anchor =
            "the coefficient matrix of {xi_J : J with fixed profile} "
            "is nonsingular";
        s.flavor = "trigA";
        s.rank = N;
        s.slots = {Slot{"q", SlotKind::Ratio}};
        for (const Slot& extra : indexedSlots("w", 3)) {
            s.slots.push_back(extra);
        }
        s.predicate = [N](const Assignment& a) {
            const auto w = listOf(a, "w", 3);
            for (int n = 1; n <= 3; ++n) {
                const std::vector<Rat> wSub(w.begin(), w.begin() + n);
                if (!verifyGtIndependence(a.at("q"), N, n, wSub, true) ||
                    !verifyGtIndependence(a.at("q"), N, n, wSub, false)) {
                    return false;
                }
            }
            return true;
        };
        checks.push_back(std::move(s));
    }
}

// ---------------------------------------------------------------------------
// Suite: degeneration
// ---------------------------------------------------------------------------

void addDegenerationChecks(std::vector<CheckSpec>& checks) {
    for (int N : {2, 3, 4}) {
        CheckSpec s;
        s.identity = "degeneration-jet-N" + std::to_string(N);
        s.anchor =
            "Rt(e^{eps x}, e^{eps y}) at q = e^{eps h/2}: order 0 "
            "vanishes, order 1 is the rational R(x,y)";
        s.flavor = "mixed";
        s.rank = N;
        s.slots = {Slot{"x", SlotKind::Integer}, Slot{"y", SlotKind::Integer},
                   Slot{"h", SlotKind::Integer}};
        s.predicate = [N](const Assignment& a) {
            return degenerateRCheck(N, a.at("x"), a.at("y"), a.at("h"));
        };
        checks.push_back(std::move(s));
    }
    {
        CheckSpec s;
        s.identity = "degeneration-exponent-sum";
        s.anchor = "alpha(m) = beta(m) + gamma(m) for every size vector m";
        s.flavor = "mixed";
        s.fixedSamples = 200;
        s.slots = indexedSlots("s", 7);
        s.predicate = [](const Assignment& a) {
            const int len = 2 + modIndex(a.at("s1"), 5);
            std::vector<long long> sizes;
            sizes.reserve(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) {
                sizes.push_back(modIndex(a.at("s" + std::to_string(i + 2)), 4));
            }
            return exponentIdentityHolds(sizes);
        };
        checks.push_back(std::move(s));
    }
}

// ---------------------------------------------------------------------------
// Suite: golden
// ---------------------------------------------------------------------------

void addGoldenChecks(std::vector<CheckSpec>& checks) {
    CheckSpec s;
    s.identity = "golden-exchange-rational-N3";
    s.anchor =
        "T_23(z1) T_12(z1) T_12(z3) |111> = "
        "h (z1-z2)(z1-z3+h) T_13(z1) T_12(z3) |111>";
    s.flavor = "rational";
    s.rank = 3;
    s.length = 3;
    s.fixedSamples = 6;
    s.slots = {Slot{"h", SlotKind::Integer}};
    for (const Slot& extra : indexedSlots("z", 3)) {
        s.slots.push_back(extra);
    }
    s.predicate = [](const Assignment& a) {
        const Rat& h = a.at("h");
        const Rat& z1 = a.at("z1");
        const Rat& z2 = a.at("z2");
        const Rat& z3 = a.at("z3");
        MonodromyContext<Rat> ctx;
        ctx.flavor = RFlavor::Rational;
        ctx.N = 3;
        ctx.qh = h;
        ctx.xi = {z1, z2, z3};
        const SparseState vac = basisState<Rat>(3, ColorTuple{1, 1, 1});
        const OperatorWord<Rat> lhsWord = {
            {2, 3, {z1}}, {1, 2, {z1}}, {1, 2, {z3}}};
        const SparseState lhs = applyWord(ctx, lhsWord, vac);
        const OperatorWord<Rat> rhsWord = {{1, 3, {z1}}, {1, 2, {z3}}};
        const SparseState rhs =
            applyWord(ctx, rhsWord, vac) * (h * (z1 - z2) * (z1 - z3 + h));
        // The expansion over the two surviving basis vectors, with the
        // displayed polynomial coefficients.
        SparseState expected(3, 3);
        expected.add(ColorTuple{3, 1, 2},
                     -(h * h * h) * (z1 - z2) * (z1 - z2 + h) *
                         (z1 - z3 + h) * (z1 - z3 + h) * (z2 - z3) *
                         (z3 - z1 + h));
        expected.add(ColorTuple{3, 2, 1},
                     h * h * h * h * (z1 - z2) * (z1 - z2 + h) *
                         (z1 - z3 + h) * (z1 - z3 + h) * (z3 - z1 + h));
        return lhs == rhs && lhs == expected;
    };
    checks.push_back(std::move(s));
}

// ---------------------------------------------------------------------------
// Suite assembly
// ---------------------------------------------------------------------------

std::vector<CheckSpec> buildChecks(const std::string& suite,
                                  const SuiteConfig& config) {
    std::vector<CheckSpec> checks;
    const bool all = suite == "all";
    if (all || suite == "rmatrix") {
        addRmatrixChecks(checks);
    }
    if (all || suite == "weightfn") {
        addWeightfnChecks(checks);
    }
    if (all || suite == "grid") {
        addGridChecks(checks);
    }
    if (all || suite == "commutation") {
        addCommutationChecks(checks);
    }
    if (all || suite == "bethe-gt") {
        addBetheChecks(checks, config);
    }
    if (all || suite == "degeneration") {
        addDegenerationChecks(checks);
    }
    if (all || suite == "golden") {
        addGoldenChecks(checks);
    }
    if (checks.empty() && !all) {
        throw InvalidArgError("unknown suite: " + suite);
    }
    return checks;
}

} // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {
        "rmatrix", "weightfn",     "grid",   "commutation",
        "bethe-gt", "degeneration", "golden",
    };
    return names;
}

bool isSuiteName(const std::string& name) {
    if (name == "all") {
        return true;
    }
    const auto& names = suiteNames();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerificationReport> runSuiteMatching(
    const std::string& suite, const SuiteConfig& config,
    const std::function<bool(const std::string& identity)>& keep) {
    std::vector<CheckSpec> checks = buildChecks(suite, config);
    if (keep) {
        checks.erase(std::remove_if(checks.begin(), checks.end(),
                                   [&keep](const CheckSpec& s) {
                                       return !keep(s.identity);
                                   }),
                    checks.end());
    }
    std::vector<VerificationReport> reports(checks.size());
    const int workers = std::max(
        1, std::min(config.jobs, static_cast<int>(checks.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) {
            reports[i] = runOne(checks[i], config);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= checks.size()) {
                        return;
                    }
                    reports[i] = runOne(checks[i], config);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.identity < b.identity;
              });
    return reports;
}

std::vector<VerificationReport> runSuite(const std::string& suite,
                                         const SuiteConfig& config) {
    return runSuiteMatching(suite, config, nullptr);
}

bool allPassed(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& rep : reports) {
        if (rep.status == "FAIL") {
            return false;
        }
    }
    return true;
}

std::string reportsToJson(const std::vector<VerificationReport>& reports) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json doc;
    doc["report_version"] = "1";
    ordered_json list = ordered_json::array();
    for (const VerificationReport& rep : reports) {
        ordered_json r;
        r["identity"] = rep.identity;
        r["anchor"] = rep.anchor;
        r["flavor"] = rep.flavor;
        ordered_json inst = ordered_json::object();
        if (rep.rank) {
            inst["N"] = *rep.rank;
        }
        if (!rep.sizes.empty()) {
            inst["sizes"] = rep.sizes;
        }
        if (rep.length) {
            inst["n"] = *rep.length;
        }
        r["instance"] = inst;
        r["seed"] = rep.seed;
        r["samples"] = rep.samples;
        r["status"] = rep.status;
        ordered_json records = ordered_json::array();
        for (const SampleRecord& rec : rep.records) {
            ordered_json point = ordered_json::object();
            for (const auto& [name, value] : rec.point) {
                point[name] = value.toString();
            }
            ordered_json one;
            one["index"] = rec.index;
            one["point"] = point;
            one["equal"] = rec.equal;
            records.push_back(one);
        }
        r["sample_records"] = records;
        if (rep.counterexample) {
            ordered_json point = ordered_json::object();
            for (const auto& [name, value] : *rep.counterexample) {
                point[name] = value.toString();
            }
            r["counterexample"] = point;
        }
        if (rep.errorText) {
            r["error"] = *rep.errorText;
        }
        r["duration_ms"] = rep.durationMs;
        list.push_back(r);
    }
    doc["reports"] = list;
    return doc.dump(2) + "\n";
}

std::string reportsToText(const std::vector<VerificationReport>& reports,
                          bool color) {
    const char* green = color ? "\x1b[32m" : "";
    const char* red = color ? "\x1b[31m" : "";
    const char* dim = color ? "\x1b[2m" : "";
    const char* reset = color ? "\x1b[0m" : "";
    std::ostringstream out;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    for (const VerificationReport& rep : reports) {
        const char* tint = dim;
        if (rep.status == "PASS") {
            tint = green;
            ++passed;
        } else if (rep.status == "FAIL") {
            tint = red;
            ++failed;
        } else {
            ++skipped;
        }
        out << "  " << tint << rep.status << reset;
        for (std::size_t pad = rep.status.size(); pad < 7; ++pad) {
            out << ' ';
        }
        out << ' ' << rep.identity << "  [" << rep.flavor << ", "
            << rep.samples << " samples, " << rep.durationMs << " ms]\n";
        if (rep.counterexample) {
            out << "          counterexample:";
            for (const auto& [name, value] : *rep.counterexample) {
                out << ' ' << name << '=' << value.toString();
            }
            out << '\n';
        }
        if (rep.errorText) {
            out << "          error: " << *rep.errorText << '\n';
        }
    }
    out << "summary: " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
    return out.str();
}

} // namespace qbethe
