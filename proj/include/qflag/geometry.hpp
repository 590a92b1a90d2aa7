#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qflag/flagbasis.hpp"
#include "qflag/orthocell.hpp"

namespace qflag {

// Point of E(C): one projective coordinate pair per defining root of the
// (monogressive) cell, exact rationals, never both zero.
struct CellPoint {
    Orthocell cell;
    std::vector<std::pair<Rational, Rational>> coords;  // (x_k : y_k)
};

// Pluecker image: sum over subsets L of the i-effective defining roots of
// x_{Lbar} y_L e^i_{s_L w}; non-effective coordinates do not appear.
RationalTensor pluecker(const CellPoint& p, int i);

// Coordinate scaling (x_k : y_k) -> (x_k : q0 y_k) exactly on the
// i-effective directions.
CellPoint sigma(const CellPoint& p, int i, const Rational& q0);

// pluecker(p, i) (x) pluecker(sigma_i(p), j), evaluated at q0.
RationalTensor segre_pair(const CellPoint& p, int i, int j, const Rational& q0);

// Samples `samples` pseudo-random integer points per monogressive cell
// (coordinates in [-9,9], (0,0) rejected, generator split per cell) and
// asserts: the Segre image lies exactly in the evaluated e-span, every
// type-I relation annihilates it, and it equals its subset expansion into
// e-vectors of effective subcells.
CheckReport check_spanned(int n, int i, int j, int samples, unsigned long long seed,
                          const Rational& q0);

// For each of the 8 rank-1 monogressive cells of S_3, the pair of scaling
// ratios applied by (sigma_1, sigma_2) to its coordinate, as a multiset.
std::map<std::pair<Rational, Rational>, int> component_ratios(const Rational& q0);

// For every subcell C(retained roots; s_L w), the pairing of each retained
// root is unchanged: pairing(s_L w, i, alpha') = pairing(w, i, alpha').
CheckReport gluing_check(const Orthocell& c, int i);

void to_json(nlohmann::json& j, const CellPoint& p);
void from_json(const nlohmann::json& j, CellPoint& p);

}  // namespace qflag
