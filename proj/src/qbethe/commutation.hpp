#pragma once

#include "qbethe/monodromy.hpp"
#include "qbethe/rational.hpp"
#include "qbethe/rmatrix.hpp"
#include "qbethe/state.hpp"

#include <map>
#include <vector>

namespace qbethe {

// ---------------------------------------------------------------------------
// The multiple-exchange identity:
//   T_N1(u^1) T_N2(u^2) ... T_NN(u^N)
//     = sum over repartitions {v} of the union of the u-families
//       coeff({v}) * T_NN(v^N) T_{N,N-1}(v^{N-1}) ... T_N1(v^1),
// with |v^j| = |u^j|, valid in both the trigonometric and the rational
// setting.  The coefficient can be computed three ways: from the
// closed weight-function display, from the band-contraction display,
// or by composing the enlargement and specialization lemmas.
// ---------------------------------------------------------------------------

// All distributions of the concatenated source families into
// targetSizes.size() families of the prescribed sizes.  Elements keep
// their pool order inside each target family; the enumeration order is
// deterministic (lexicographic in the index combinations).
std::vector<std::vector<std::vector<Rat>>> enumeratePartitions(
    const std::vector<std::vector<Rat>>& sources,
    const std::vector<int>& targetSizes);

enum class CoeffRoute {
    WeightFunction,   // closed display with the weight function
    BandContraction,  // display with the band partition function
    LemmaComposition, // enlargement + specialization composed
};

// The repartition coefficient for given source families uFam (sizes
// m_1..m_N) and target families vFam (same sizes), by the chosen
// route.  Throws DomainError when the sampled point hits a vanishing
// denominator.
Rat commutationCoefficient(RFlavor flavor, const Rat& qh,
                           const std::vector<std::vector<Rat>>& uFam,
                           const std::vector<std::vector<Rat>>& vFam,
                           CoeffRoute route);

// The reversed-order right-hand side as a full operator matrix on the
// quantum space with inhomogeneities xi.
std::map<ColorTuple, SparseState> rhsCommutation(
    RFlavor flavor, const Rat& qh, const std::vector<std::vector<Rat>>& uFam,
    const std::vector<Rat>& xi, CoeffRoute route);

// Full-matrix verification of the identity with the weight-function
// coefficient (flavor selects the trigonometric or rational version).
bool verifyTheoremCommutation(RFlavor flavor, const Rat& qh,
                              const std::vector<std::vector<Rat>>& uFam,
                              const std::vector<Rat>& xi);

// Same with the band-contraction coefficient.
bool verifyPropCommutation(RFlavor flavor, const Rat& qh,
                           const std::vector<std::vector<Rat>>& uFam,
                           const std::vector<Rat>& xi);

// Rank-two form with the determinant coefficient:
//   T_21(u^1) T_22(u^2) = sum coeff * K(u^1|v^1) T_22(v^2) T_21(v^1).
bool verifyRankOneIKForm(RFlavor flavor, const Rat& qh,
                         const std::vector<Rat>& u1, const std::vector<Rat>& u2,
                         const std::vector<Rat>& xi);

// Enlargement lemma: the extended band contraction equals
// prod_{j<N} (q u^j - q^-1 v^N)-type factors times the plain one.
bool verifyEnlargementLemma(RFlavor flavor, const Rat& qh,
                            const std::vector<std::vector<Rat>>& uFam,
                            const std::vector<std::vector<Rat>>& vFamPlus);

// Specialization lemma: the weight function at the cumulative-union
// layering equals the cross-family product times the extended band
// contraction.
bool verifySpecializationLemma(RFlavor flavor, const Rat& qh,
                               const std::vector<std::vector<Rat>>& uFam,
                               const std::vector<std::vector<Rat>>& vFamPlus);

// Colored relation: for the coloring I of the inhomogeneity list w
// (part j = values at color-j positions), the layered weight function
// at the cumulative-union layering equals the cross-part product times
// the colored band contraction.
bool verifyColoredRelation(RFlavor flavor, const Rat& qh, int N,
                           const std::vector<Rat>& w, const ColorTuple& I);

} // namespace qbethe
