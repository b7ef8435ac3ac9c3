#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/rational.hpp"

#include <string>
#include <vector>

namespace qbethe {

// Truncated power series in a formal parameter eps, with exact rational
// coefficients: c[0] + c[1]*eps + ... + c[order]*eps^order.
//
// Mixed-order arithmetic truncates to the smaller order, which is the
// correct semantics for jets.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}

    explicit TruncatedSeries(int order) : c_(checkOrder(order) + 1) {}

    TruncatedSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) {
            throw InvalidArgError("series needs at least the constant term");
        }
    }

    static TruncatedSeries constant(const Rat& value, int order) {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }

    // Jet of exp(eps*x): coefficient of eps^k is x^k / k!.
    static TruncatedSeries exponential(const Rat& x, int order) {
        TruncatedSeries s(order);
        Rat term = Rat(1);
        s.c_[0] = term;
        for (int k = 1; k <= order; ++k) {
            term = term * x / Rat(k);
            s.c_[k] = term;
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& coeff(int k) const {
        if (k < 0 || k > order()) {
            throw InvalidArgError("series coefficient index out of range");
        }
        return c_[static_cast<std::size_t>(k)];
    }

    Rat& coeff(int k) {
        if (k < 0 || k > order()) {
            throw InvalidArgError("series coefficient index out of range");
        }
        return c_[static_cast<std::size_t>(k)];
    }

    bool isZero() const {
        for (const Rat& x : c_) {
            if (!x.isZero()) {
                return false;
            }
        }
        return true;
    }

    // Index of the first nonzero coefficient; order()+1 for the zero jet.
    int valuation() const {
        for (int k = 0; k <= order(); ++k) {
            if (!c_[static_cast<std::size_t>(k)].isZero()) {
                return k;
            }
        }
        return order() + 1;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int k = 0; k <= n; ++k) {
            r.c_[k] = a.c_[k] + b.c_[k];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int k = 0; k <= n; ++k) {
            r.c_[k] = a.c_[k] - b.c_[k];
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].isZero()) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j].isZero()) {
                    continue;
                }
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (int k = 0; k <= order(); ++k) {
            r.c_[k] = -c_[k];
        }
        return r;
    }

    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const {
        if (c_[0].isZero()) {
            throw DomainError("series inverse requires a unit constant term");
        }
        const int n = order();
        TruncatedSeries r(n);
        const Rat inv0 = c_[0].inverse();
        r.c_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            Rat acc;
            for (int i = 1; i <= k; ++i) {
                acc += c_[static_cast<std::size_t>(i)] * r.c_[k - i];
            }
            r.c_[k] = -inv0 * acc;
        }
        return r;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        return a * b.inverse();
    }

    // Division that cancels a common power of eps first: num/den where
    // den = eps^v * unit.  Requires val(num) >= val(den); the result's
    // order shrinks by v.  Throws DomainError when the quotient is not
    // a power series or the denominator jet vanishes identically.
    static TruncatedSeries divideCancelling(const TruncatedSeries& num,
                                            const TruncatedSeries& den) {
        const int n = std::min(num.order(), den.order());
        const int v = den.valuation();
        if (v > den.order()) {
            throw DomainError("series division by an identically zero jet");
        }
        if (num.valuation() < v) {
            throw DomainError("series quotient is not a power series");
        }
        if (v > n) {
            throw DomainError("series division loses all retained orders");
        }
        TruncatedSeries ns(n - v);
        TruncatedSeries ds(n - v);
        for (int k = 0; k <= n - v; ++k) {
            ns.c_[k] = (k + v <= num.order()) ? num.coeff(k + v) : Rat(0);
            ds.c_[k] = den.coeff(k + v);
        }
        return ns * ds.inverse();
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) {
            return false;
        }
        for (int k = 0; k <= a.order(); ++k) {
            if (a.c_[k] != b.c_[k]) {
                return false;
            }
        }
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    std::string toString() const {
        std::string out = "[";
        for (int k = 0; k <= order(); ++k) {
            if (k) {
                out += ", ";
            }
            out += c_[static_cast<std::size_t>(k)].toString();
        }
        out += "]";
        return out;
    }

private:
    static int checkOrder(int order) {
        if (order < 0) {
            throw InvalidArgError("series order must be nonnegative");
        }
        return order;
    }

    std::vector<Rat> c_;
};

// Jet of exp(eps*x) through the given order.  Convenience spelling used
// by the degeneration checks.
inline TruncatedSeries truncatedExp(const Rat& x, int order) {
    return TruncatedSeries::exponential(x, order);
}

} // namespace qbethe
