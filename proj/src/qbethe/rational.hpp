#pragma once

#include "qbethe/errors.hpp"

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace qbethe {

// Exact rational number backed by GMP's mpq_t.
//
// Invariants: always canonical (lowest terms, positive denominator).
// Every arithmetic operation is exact; division by zero throws
// DomainError instead of aborting.  The canonical text form is
// "num/den" with decimal digits, including a "/1" denominator, so the
// serialization is unambiguous and stable.
class Rat {
public:
    Rat() { mpq_init(v_); }

    Rat(long long value) { // NOLINT(google-explicit-constructor)
        mpq_init(v_);
        mpq_set_si(v_, static_cast<long>(value), 1);
    }

    Rat(long long num, long long den) {
        if (den == 0) {
            throw DomainError("rational with zero denominator");
        }
        mpq_init(v_);
        mpq_set_si(v_, static_cast<long>(num), 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, static_cast<long>(den), 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }

    Rat(const Rat& other) {
        mpq_init(v_);
        mpq_set(v_, other.v_);
    }

    Rat(Rat&& other) noexcept {
        mpq_init(v_);
        mpq_swap(v_, other.v_);
    }

    Rat& operator=(const Rat& other) {
        if (this != &other) {
            mpq_set(v_, other.v_);
        }
        return *this;
    }

    Rat& operator=(Rat&& other) noexcept {
        if (this != &other) {
            mpq_swap(v_, other.v_);
        }
        return *this;
    }

    ~Rat() { mpq_clear(v_); }

    // Parses "num" or "num/den" in base 10.  Throws InvalidArgError on
    // malformed input and DomainError on a zero denominator.
    static Rat fromString(const std::string& text) {
        if (text.empty()) {
            throw InvalidArgError("empty rational literal");
        }
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            const bool ok = (c >= '0' && c <= '9') || c == '/' ||
                            (c == '-' && (i == 0 || text[i - 1] == '/'));
            if (!ok) {
                throw InvalidArgError("malformed rational literal: " + text);
            }
        }
        Rat r;
        if (mpq_set_str(r.v_, text.c_str(), 10) != 0) {
            throw InvalidArgError("malformed rational literal: " + text);
        }
        if (mpz_sgn(mpq_denref(r.v_)) == 0) {
            throw DomainError("rational literal with zero denominator: " + text);
        }
        mpq_canonicalize(r.v_);
        return r;
    }

    bool isZero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }

    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }

    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }

    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.isZero()) {
            throw DomainError("rational division by zero");
        }
        Rat r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }

    Rat operator-() const {
        Rat r;
        mpq_neg(r.v_, v_);
        return r;
    }

    Rat& operator+=(const Rat& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (isZero()) {
            throw DomainError("inverse of zero");
        }
        Rat r;
        mpq_inv(r.v_, v_);
        return r;
    }

    // Integer power; negative exponents invert (throwing on zero base).
    Rat pow(long long e) const {
        if (e < 0) {
            return inverse().pow(-e);
        }
        Rat base = *this;
        Rat acc = Rat(1);
        unsigned long long exp = static_cast<unsigned long long>(e);
        while (exp > 0) {
            if (exp & 1ULL) {
                acc *= base;
            }
            base *= base;
            exp >>= 1ULL;
        }
        return acc;
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const Rat& a, const Rat& b) {
        return mpq_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    // Canonical "num/den" form, e.g. "5/1", "-3/7".
    std::string toString() const {
        std::string out = mpzToString(mpq_numref(v_));
        out += '/';
        out += mpzToString(mpq_denref(v_));
        return out;
    }

private:
    static std::string mpzToString(mpz_srcptr z) {
        char* raw = mpz_get_str(nullptr, 10, z);
        std::string s(raw);
        void (*freefn)(void*, size_t) = nullptr;
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    mpq_t v_;
};

} // namespace qbethe
