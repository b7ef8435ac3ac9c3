#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbethe {

// A pure tensor basis vector of (C^N)^{\otimes n} is labelled by the
// tuple of colors (each in 1..N) carried by the n factors, left factor
// first.
using ColorTuple = std::vector<int>;

// Tuple of `count` copies of `color`.
inline ColorTuple repeatTuple(int color, int count) {
    if (count < 0) {
        throw InvalidArgError("negative repeat count");
    }
    return ColorTuple(static_cast<std::size_t>(count), color);
}

inline ColorTuple concatTuples(const ColorTuple& a, const ColorTuple& b) {
    ColorTuple out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Compact text form using run-lengths: (1,1,3) <-> "1^2,3".
std::string formatColorTuple(const ColorTuple& key);
ColorTuple parseColorTuple(const std::string& text);

inline std::string formatColorTuple(const ColorTuple& key) {
    std::string out;
    std::size_t i = 0;
    while (i < key.size()) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(key[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

inline ColorTuple parseColorTuple(const std::string& text) {
    ColorTuple out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string part = text.substr(pos, comma - pos);
        const std::size_t caret = part.find('^');
        const std::string colorText =
            caret == std::string::npos ? part : part.substr(0, caret);
        const std::string countText =
            caret == std::string::npos ? "1" : part.substr(caret + 1);
        try {
            const int color = std::stoi(colorText);
            const int count = std::stoi(countText);
            if (color < 1 || count < 1) {
                throw InvalidArgError("bad color-tuple literal: " + text);
            }
            for (int k = 0; k < count; ++k) {
                out.push_back(color);
            }
        } catch (const InvalidArgError&) {
            throw;
        } catch (const std::exception&) {
            throw InvalidArgError("bad color-tuple literal: " + text);
        }
        pos = comma + 1;
        if (comma == text.size()) {
            break;
        }
    }
    return out;
}

// Number of occurrences of each color 1..N in the tuple.
inline std::vector<int> colorContent(const ColorTuple& key, int N) {
    std::vector<int> counts(static_cast<std::size_t>(N), 0);
    for (int c : key) {
        if (c < 1 || c > N) {
            throw InvalidArgError("color out of range in tuple");
        }
        ++counts[static_cast<std::size_t>(c - 1)];
    }
    return counts;
}

// Positions (1-based) of the elements of `inner` inside the sorted list
// `outer`.  Both lists must be strictly increasing and `inner` must be
// a subset of `outer`.  Example: outer = {2,5,7}, inner = {5,7} gives
// {2,3}.
inline std::vector<int> relabelSubset(const std::vector<int>& outer,
                                      const std::vector<int>& inner) {
    for (std::size_t i = 1; i < outer.size(); ++i) {
        if (outer[i - 1] >= outer[i]) {
            throw InvalidArgError("outer list must be strictly increasing");
        }
    }
    for (std::size_t i = 1; i < inner.size(); ++i) {
        if (inner[i - 1] >= inner[i]) {
            throw InvalidArgError("inner list must be strictly increasing");
        }
    }
    std::vector<int> out;
    out.reserve(inner.size());
    std::size_t j = 0;
    for (int x : inner) {
        while (j < outer.size() && outer[j] < x) {
            ++j;
        }
        if (j == outer.size() || outer[j] != x) {
            throw InvalidArgError("inner list is not a subset of outer list");
        }
        out.push_back(static_cast<int>(j + 1));
    }
    return out;
}

// Sparse vector in (C^N)^{\otimes n} with exact scalar coefficients.
// Zero coefficients are never stored, so equality of the entry maps is
// equality of vectors.  The same type serves for covectors (duals); the
// pairing below contracts one against the other.
template <class S>
class SparseStateT {
public:
    SparseStateT() : N_(0), n_(0) {}

    SparseStateT(int N, int n) : N_(N), n_(n) {
        if (N < 1 || n < 0) {
            throw InvalidArgError("state needs N >= 1 and n >= 0");
        }
    }

    int rank() const { return N_; }
    int sites() const { return n_; }
    bool isZero() const { return entries_.empty(); }
    const std::map<ColorTuple, S>& entries() const { return entries_; }

    void checkKey(const ColorTuple& key) const {
        if (static_cast<int>(key.size()) != n_) {
            throw InvalidArgError("color tuple has wrong length");
        }
        for (int c : key) {
            if (c < 1 || c > N_) {
                throw InvalidArgError("color out of range in tuple");
            }
        }
    }

    void add(const ColorTuple& key, const S& coeff) {
        checkKey(key);
        if (coeff == S(0)) {
            return;
        }
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entries_.emplace(key, coeff);
            return;
        }
        it->second += coeff;
        if (it->second == S(0)) {
            entries_.erase(it);
        }
    }

    S coeff(const ColorTuple& key) const {
        checkKey(key);
        auto it = entries_.find(key);
        return it == entries_.end() ? S(0) : it->second;
    }

    SparseStateT& operator+=(const SparseStateT& o) {
        requireShape(o);
        for (const auto& [key, c] : o.entries_) {
            add(key, c);
        }
        return *this;
    }

    SparseStateT& operator-=(const SparseStateT& o) {
        requireShape(o);
        for (const auto& [key, c] : o.entries_) {
            add(key, -c);
        }
        return *this;
    }

    SparseStateT& operator*=(const S& s) {
        if (s == S(0)) {
            entries_.clear();
            return *this;
        }
        for (auto& [key, c] : entries_) {
            c *= s;
        }
        return *this;
    }

    friend SparseStateT operator+(SparseStateT a, const SparseStateT& b) {
        a += b;
        return a;
    }
    friend SparseStateT operator-(SparseStateT a, const SparseStateT& b) {
        a -= b;
        return a;
    }
    friend SparseStateT operator*(SparseStateT a, const S& s) {
        a *= s;
        return a;
    }

    friend bool operator==(const SparseStateT& a, const SparseStateT& b) {
        return a.N_ == b.N_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseStateT& a, const SparseStateT& b) {
        return !(a == b);
    }

    std::string toString() const {
        if (entries_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [key, c] : entries_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + scalarText(c) + ")*e[" + formatColorTuple(key) + "]";
        }
        return out;
    }

private:
    static std::string scalarText(const Rat& c) { return c.toString(); }
    template <class T>
    static std::string scalarText(const T& c) {
        return c.toString();
    }

    void requireShape(const SparseStateT& o) const {
        if (N_ != o.N_ || n_ != o.n_) {
            throw InvalidArgError("state shape mismatch");
        }
    }

    int N_;
    int n_;
    std::map<ColorTuple, S> entries_;
};

using SparseState = SparseStateT<Rat>;

// Basis vector e_key (or basis covector, by role).
template <class S>
SparseStateT<S> basisState(int N, const ColorTuple& key) {
    SparseStateT<S> s(N, static_cast<int>(key.size()));
    s.add(key, S(1));
    return s;
}

// Pairing <dual, state> = sum over tuples of the coefficient products.
template <class S>
S pairStates(const SparseStateT<S>& dual, const SparseStateT<S>& state) {
    if (dual.rank() != state.rank() || dual.sites() != state.sites()) {
        throw InvalidArgError("pairing shape mismatch");
    }
    S acc(0);
    const auto& a = dual.entries();
    const auto& b = state.entries();
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (it->first < jt->first) {
            ++it;
        } else if (jt->first < it->first) {
            ++jt;
        } else {
            acc += it->second * jt->second;
            ++it;
            ++jt;
        }
    }
    return acc;
}

} // namespace qbethe
