#pragma once

#include <map>
#include <string>
#include <vector>

namespace qbethe {

// Objects accepted by computeValue, in canonical order.
const std::vector<std::string>& valueObjects();

// Parses a semicolon-separated binding list "name=value;name=value"
// into a map.  Values stay raw strings; each consumer parses its own
// types.  Throws InvalidArgError on malformed entries or duplicates.
std::map<std::string, std::string> parseBindings(const std::string& params);

// Evaluates one named scalar quantity exactly at the given bindings
// and renders it together with an echo of the parsed inputs.  `format`
// is "text" (name = value lines) or "json".  Rationals accept "num" or
// "num/den" literals and render canonically as "num/den".
//
// Objects and their bindings:
//   fFunction        flavor, q|h, u, v
//   rElement         flavor, q|h, u, v, a, b, c, d
//   ikDet            flavor, q|h, n, u1..un, v1..vn
//   ikLeft, ikRight  q, n, u1..un, v1..vn
//   domainWall       flavor, q|h, n, u1..un, v1..vn
//   gridH            flavor, q|h, fam, a1..aF, u<j>_<i>, b1..bF, v<j>_<i>
//   gridK            like gridH with one extra quantum family bF+1, v<F+1>_<i>
//   weightW, psi     flavor, q|h, N, L, k1..k{N-1}, t<p>_<i>, v1..vL, I1..IL
//   qdet-eigenvalue  q, n, w1..wn, N, J1..Jn, j, u
std::string computeValue(const std::string& object, const std::string& params,
                         const std::string& format);

} // namespace qbethe
