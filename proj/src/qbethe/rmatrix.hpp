#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/state.hpp"

#include <string>
#include <vector>

namespace qbethe {

// The three vertex-weight families handled by the library.
//
//  * TrigA / TrigB: the two trigonometric conventions.  They share the
//    diagonal weights and differ by which spectral parameter dresses a
//    color exchange; TrigB is TrigA with all colors reflected
//    c -> N+1-c.
//  * Rational: the additive-difference weights with deformation h.
enum class RFlavor {
    TrigA,
    TrigB,
    Rational,
};

inline std::string flavorName(RFlavor f) {
    switch (f) {
        case RFlavor::TrigA: return "trigA";
        case RFlavor::TrigB: return "trigB";
        case RFlavor::Rational: return "rational";
    }
    throw InvalidArgError("unknown flavor");
}

inline RFlavor flavorFromName(const std::string& name) {
    if (name == "trigA") return RFlavor::TrigA;
    if (name == "trigB") return RFlavor::TrigB;
    if (name == "rational") return RFlavor::Rational;
    throw InvalidArgError("unknown flavor name: " + name);
}

// Matrix element [R(u,v)]_{a b}^{c d}: the coefficient of e_c (x) e_d
// in R(u,v) (e_a (x) e_b).  `qh` is q for the trigonometric flavors and
// h for the rational one.  Works over any exact scalar type S that
// supports ring operations and inverse().
template <class S>
S rElement(RFlavor flavor, const S& qh, const S& u, const S& v, int a, int b,
           int c, int d) {
    const S zero = u - u;
    if (a == b) {
        if (c != a || d != a) {
            return zero;
        }
        switch (flavor) {
            case RFlavor::TrigA:
            case RFlavor::TrigB:
                return qh * u - qh.inverse() * v;
            case RFlavor::Rational:
                return u - v + qh;
        }
    }
    if (c == a && d == b) { // colors pass through
        return u - v;
    }
    if (c == b && d == a) { // colors exchange
        switch (flavor) {
            case RFlavor::TrigA:
                return (qh - qh.inverse()) * (a < b ? u : v);
            case RFlavor::TrigB:
                return (qh - qh.inverse()) * (a < b ? v : u);
            case RFlavor::Rational:
                return qh;
        }
    }
    return zero;
}

// Applies R_{siteA siteB}(u, v) to a state: the R operator acts on
// tensor factors siteA (first slot, parameter u) and siteB (second
// slot, parameter v).  Sites are 0-based and must differ.
template <class S>
SparseStateT<S> applyRTwoSites(RFlavor flavor, const S& qh, const S& u,
                               const S& v, int siteA, int siteB,
                               const SparseStateT<S>& state) {
    const int n = state.sites();
    if (siteA < 0 || siteB < 0 || siteA >= n || siteB >= n || siteA == siteB) {
        throw InvalidArgError("applyRTwoSites: bad site indices");
    }
    SparseStateT<S> out(state.rank(), n);
    for (const auto& [key, coeff] : state.entries()) {
        const int a = key[static_cast<std::size_t>(siteA)];
        const int b = key[static_cast<std::size_t>(siteB)];
        // Straight-through branch.
        {
            const S w = rElement(flavor, qh, u, v, a, b, a, b);
            out.add(key, coeff * w);
        }
        // Exchange branch.
        if (a != b) {
            const S w = rElement(flavor, qh, u, v, a, b, b, a);
            ColorTuple swapped = key;
            swapped[static_cast<std::size_t>(siteA)] = b;
            swapped[static_cast<std::size_t>(siteB)] = a;
            out.add(swapped, coeff * w);
        }
    }
    return out;
}

// Yang-Baxter check on all N^3 basis vectors of a three-fold tensor
// product: R_12(u1,u2) R_13(u1,u3) R_23(u2,u3) applied rightmost first
// must agree with R_23(u2,u3) R_13(u1,u3) R_12(u1,u2).
template <class S>
bool checkYangBaxter(RFlavor flavor, int N, const S& qh, const S& u1,
                     const S& u2, const S& u3) {
    ColorTuple key(3, 1);
    for (key[0] = 1; key[0] <= N; ++key[0]) {
        for (key[1] = 1; key[1] <= N; ++key[1]) {
            for (key[2] = 1; key[2] <= N; ++key[2]) {
                SparseStateT<S> lhs = basisState<S>(N, key);
                lhs = applyRTwoSites(flavor, qh, u2, u3, 1, 2, lhs);
                lhs = applyRTwoSites(flavor, qh, u1, u3, 0, 2, lhs);
                lhs = applyRTwoSites(flavor, qh, u1, u2, 0, 1, lhs);
                SparseStateT<S> rhs = basisState<S>(N, key);
                rhs = applyRTwoSites(flavor, qh, u1, u2, 0, 1, rhs);
                rhs = applyRTwoSites(flavor, qh, u1, u3, 0, 2, rhs);
                rhs = applyRTwoSites(flavor, qh, u2, u3, 1, 2, rhs);
                if (lhs != rhs) {
                    return false;
                }
            }
        }
    }
    return true;
}

// The scalar in R_12(u,v) R_21(v,u) = scalar * Id.
template <class S>
S unitarityScalar(RFlavor flavor, const S& qh, const S& u, const S& v) {
    switch (flavor) {
        case RFlavor::TrigA:
        case RFlavor::TrigB:
            return (qh * u - qh.inverse() * v) * (qh * v - qh.inverse() * u);
        case RFlavor::Rational:
            return (u - v + qh) * (v - u + qh);
    }
    throw InvalidArgError("unknown flavor");
}

// Unitarity check on all N^2 basis vectors.
template <class S>
bool checkUnitarity(RFlavor flavor, int N, const S& qh, const S& u,
                    const S& v) {
    const S scalar = unitarityScalar(flavor, qh, u, v);
    ColorTuple key(2, 1);
    for (key[0] = 1; key[0] <= N; ++key[0]) {
        for (key[1] = 1; key[1] <= N; ++key[1]) {
            SparseStateT<S> s = basisState<S>(N, key);
            s = applyRTwoSites(flavor, qh, v, u, 1, 0, s); // R_21(v,u)
            s = applyRTwoSites(flavor, qh, u, v, 0, 1, s); // R_12(u,v)
            SparseStateT<S> expected = basisState<S>(N, key);
            expected *= scalar;
            if (s != expected) {
                return false;
            }
        }
    }
    return true;
}

// Element-level reflection duality between the two trigonometric
// flavors: [R~]_{a b}^{c d} = [R]_{N+1-a, N+1-b}^{N+1-c, N+1-d}.
template <class S>
bool checkTrigDuality(int N, const S& qh, const S& u, const S& v, int a, int b,
                      int c, int d) {
    const S lhs = rElement(RFlavor::TrigB, qh, u, v, a, b, c, d);
    const S rhs = rElement(RFlavor::TrigA, qh, u, v, N + 1 - a, N + 1 - b,
                           N + 1 - c, N + 1 - d);
    return lhs == rhs;
}

} // namespace qbethe
