#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qbethe {

// Dense univariate polynomial over the exact rationals.  The
// representation is normalized: no trailing zero coefficients, and the
// zero polynomial has an empty coefficient vector (degree -1).
class Poly {
public:
    Poly() = default;

    Poly(long long value) { // NOLINT(google-explicit-constructor)
        if (value != 0) {
            c_.push_back(Rat(value));
        }
    }

    explicit Poly(const Rat& value) {
        if (!value.isZero()) {
            c_.push_back(value);
        }
    }

    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    // The formal variable.
    static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    // a + b*x.
    static Poly linear(const Rat& a, const Rat& b) {
        return Poly(std::vector<Rat>{a, b});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }

    const Rat& leading() const {
        if (isZero()) {
            throw DomainError("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    Rat coeff(int k) const {
        if (k < 0) {
            throw InvalidArgError("negative polynomial coefficient index");
        }
        if (k >= static_cast<int>(c_.size())) {
            return Rat(0);
        }
        return c_[static_cast<std::size_t>(k)];
    }

    Rat eval(const Rat& at) const {
        Rat acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * at + c_[i];
        }
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) {
                c[i] += a.c_[i];
            }
            if (i < b.c_.size()) {
                c[i] += b.c_[i];
            }
        }
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) {
                c[i] += a.c_[i];
            }
            if (i < b.c_.size()) {
                c[i] -= b.c_[i];
            }
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.isZero() || b.isZero()) {
            return Poly();
        }
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].isZero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<Rat> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c[i] = -c_[i];
        }
        return Poly(std::move(c));
    }

    Poly scaled(const Rat& s) const {
        std::vector<Rat> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c[i] = c_[i] * s;
        }
        return Poly(std::move(c));
    }

    // Euclidean division: returns (quotient, remainder) with
    // deg(remainder) < deg(divisor).
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        if (den.isZero()) {
            throw DomainError("polynomial division by zero");
        }
        Poly r = num;
        std::vector<Rat> q;
        const int dd = den.degree();
        if (num.degree() >= dd) {
            q.assign(static_cast<std::size_t>(num.degree() - dd + 1), Rat(0));
        }
        const Rat lead_inv = den.leading().inverse();
        while (!r.isZero() && r.degree() >= dd) {
            const int shift = r.degree() - dd;
            const Rat factor = r.leading() * lead_inv;
            q[static_cast<std::size_t>(shift)] = factor;
            std::vector<Rat> sub(static_cast<std::size_t>(shift));
            sub.resize(static_cast<std::size_t>(shift), Rat(0));
            sub.insert(sub.end(), den.c_.begin(), den.c_.end());
            Poly s(std::move(sub));
            r = r - s.scaled(factor);
        }
        return {Poly(std::move(q)), r};
    }

    // Monic greatest common divisor (1 for coprime inputs, 0 only when
    // both inputs are 0).
    static Poly gcd(Poly a, Poly b) {
        while (!b.isZero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.isZero()) {
            return a;
        }
        return a.scaled(a.leading().inverse());
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string toString() const {
        if (isZero()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c_[i].toString() + ")*e^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) {
            c_.pop_back();
        }
    }

    std::vector<Rat> c_;
};

// Field of fractions of Poly: an exact univariate rational function.
// Always kept reduced (gcd of numerator and denominator is 1) with a
// monic denominator, so equality is plain component comparison.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}

    RationalFn(long long value) // NOLINT(google-explicit-constructor)
        : num_(value), den_(1) {}

    explicit RationalFn(const Rat& value) : num_(value), den_(1) {}

    explicit RationalFn(Poly num) : num_(std::move(num)), den_(1) {}

    RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.isZero()) {
            throw DomainError("rational function with zero denominator");
        }
        reduce();
    }

    static RationalFn x() { return RationalFn(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    // Evaluation; throws DomainError at a pole.
    Rat eval(const Rat& at) const {
        const Rat d = den_.eval(at);
        if (d.isZero()) {
            throw DomainError("rational function evaluated at a pole");
        }
        return num_.eval(at) / d;
    }

    // Value at the origin of the formal variable.
    Rat atZero() const { return eval(Rat(0)); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.isZero()) {
            throw DomainError("rational function division by zero");
        }
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFn operator-() const {
        RationalFn r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    RationalFn inverse() const {
        if (isZero()) {
            throw DomainError("inverse of the zero rational function");
        }
        return RationalFn(den_, num_);
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) {
        return !(a == b);
    }

    std::string toString() const {
        return "(" + num_.toString() + ") / (" + den_.toString() + ")";
    }

private:
    void reduce() {
        if (num_.isZero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        const Rat lead = den_.leading();
        if (!(lead == Rat(1))) {
            const Rat inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace qbethe
