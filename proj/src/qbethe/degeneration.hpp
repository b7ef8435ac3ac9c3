#pragma once

#include "qbethe/rational.hpp"

#include <vector>

namespace qbethe {

// ---------------------------------------------------------------------------
// Degeneration checks
//
// The trigonometric and rational structures are tied together by the
// substitution u = exp(eps*x), v = exp(eps*y), q = exp(eps*h/2): to
// first order in eps every convention-B trigonometric R-matrix entry
// becomes the rational entry at (x, y, h).  The accompanying exponent
// bookkeeping balances the scaling prefactors that appear when entire
// operator words are degenerated.
// ---------------------------------------------------------------------------

// Exponents attached to a vector of part sizes m_1..m_N with
// n = m_1 + ... + m_N:
//   alpha = n * sum_{j=2..N} (j-1) m_j
//   beta  = n * sum_{j=2..N} m_j
//   gamma = sum_{j=2..N-1} (m_{j+1}+...+m_N)(m_1+...+m_{j-1})
//         + sum_{1<=j<k<=N-1} (2j-1) m_{k+1} m_{j+1}
//         + sum_{j=2..N-1} (j-1) m_{j+1}^2
struct ExponentTriple {
    long long alpha = 0;
    long long beta = 0;
    long long gamma = 0;
};

ExponentTriple exponentTriple(const std::vector<long long>& sizes);

// The balance alpha = beta + gamma.
bool exponentIdentityHolds(const std::vector<long long>& sizes);

// Substitutes order-2 jets of exp(eps*x), exp(eps*y), exp(eps*h/2)
// into every convention-B trigonometric R-matrix entry of rank N and
// checks that the constant term vanishes and the linear term equals
// the rational entry at (x, y) with parameter h.
bool degenerateRCheck(int N, const Rat& x, const Rat& y, const Rat& h);

} // namespace qbethe
