#pragma once

#include "qbethe/monodromy.hpp"
#include "qbethe/rational.hpp"
#include "qbethe/rmatrix.hpp"
#include "qbethe/state.hpp"

#include <vector>

namespace qbethe {

// Scalar partition functions obtained by contracting monodromy words
// between explicit boundary states.  Throughout, parameter families
// are passed as lists of lists; the quantum-space inhomogeneities are
// always the concatenation of the listed families, in order.

// <1^n| T_21(u_1) ... T_21(u_n) |2^n> with inhomogeneities v (rank 2).
Rat domainWall(RFlavor flavor, const Rat& qh, const std::vector<Rat>& u,
               const std::vector<Rat>& v);

// <j^m| T_Nj(vj_1) ... T_Nj(vj_m) |N^m> with inhomogeneities v0 (rank N).
Rat domainWallColored(RFlavor flavor, const Rat& qh, int N, int j,
                      const std::vector<Rat>& vj, const std::vector<Rat>& v0);

// Layered reconstruction of the weight function: starting from the
// all-ones tuple of length k_1, layer p transports each coefficient of
// the previous layer through T_{p+1,c}(u^p_a) factors into a space of
// length k_{p+1}; the result is the coefficient of the coloring I in
// the final layer (quantum parameters v, rank N = #layers + 1).
Rat psiLayered(RFlavor flavor, const Rat& qh,
               const std::vector<std::vector<Rat>>& layers,
               const std::vector<Rat>& v, const ColorTuple& I);

// <1^{a_1} ... (N-1)^{a_{N-1}}| T_N1(u^1) ... T_{N,N-1}(u^{N-1}) |N^S>
// where a_j = |u^j|, S = sum a_j, and the inhomogeneities are the
// concatenation of the N-1 families v^1..v^{N-1}.
Rat gridH(RFlavor flavor, const Rat& qh,
          const std::vector<std::vector<Rat>>& uFam,
          const std::vector<std::vector<Rat>>& vFam);

// Enlarged variant: same word, but the quantum space also carries the
// family v^N, the ket is |N^{S + |v^N|}>, and the bra keeps |v^N|
// sites of color N:
// <1^{a_1} ... (N-1)^{a_{N-1}} N^{|v^N|}| word |N^{S+|v^N|}>.
Rat gridK(RFlavor flavor, const Rat& qh,
          const std::vector<std::vector<Rat>>& uFam,
          const std::vector<std::vector<Rat>>& vFam);

// Colored variant against an arbitrary bra coloring I:
// <I| T_N1(w_{J_1}) ... T_{N,N-1}(w_{J_{N-1}}) |N^n> with
// inhomogeneities w (n = |w|).
Rat gridKColored(RFlavor flavor, const Rat& qh, int N,
                 const std::vector<std::vector<Rat>>& wParts,
                 const std::vector<Rat>& w, const ColorTuple& I);

// Like gridH with the extra rightmost diagonal factor T_NN(u^N):
// uFamAll lists N families u^1..u^N; the bra and the quantum space are
// those of gridH on u^1..u^{N-1}.
Rat gridF(RFlavor flavor, const Rat& qh,
          const std::vector<std::vector<Rat>>& uFamAll,
          const std::vector<std::vector<Rat>>& vFam);

} // namespace qbethe
