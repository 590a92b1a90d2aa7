#pragma once

#include <optional>
#include <vector>

#include "qflag/weyl.hpp"

namespace qflag {

// Right coset <s_{alpha_1},...,s_{alpha_d}> w of a subgroup generated by
// reflections in pairwise orthogonal positive roots, stored canonically:
// roots sorted lexicographically by (b, a) and w the minimal-length coset
// representative (ties broken by lexicographically smallest array).
struct Orthocell {
    int n = 0;
    std::vector<PositiveRoot> roots;
    Permutation w;

    int rank() const { return static_cast<int>(roots.size()); }
    auto operator<=>(const Orthocell&) const = default;
};

// Canonicalizes the coset <s_roots> w. Throws on duplicate or
// non-orthogonal roots.
Orthocell make_cell(int n, std::vector<PositiveRoot> roots, const Permutation& w);

// All 2^d elements s_L w, indexed by subset in binary order (bit k of the
// index selects root k).
std::vector<Permutation> coset_elements(const Orthocell& c);

// Definition: l(s_L w) = l(w) + |L| for every subset L.
bool is_monogressive(const Orthocell& c);

// Array criterion, evaluated directly on w and the roots.
bool is_monogressive_by_array(const Orthocell& c);

// Every defining reflection moves the weight set {w(1..i)}.
bool is_effective(const Orthocell& c, int i);
bool is_ij_effective(const Orthocell& c, int i, int j);

// All monogressive orthocells of the given rank (or all ranks when
// nullopt), canonical and in lexicographic order of (roots, w).
std::vector<Orthocell> enumerate_monogressive(int n, std::optional<int> rank = std::nullopt);

// Every monogressive ij-effective cell, all ranks, deterministic order.
std::vector<Orthocell> enumerate_effective_all(int n, int i, int j);

// One cell per ij-normal class (distinct classes give independent
// e-vectors; cells within a class give the same vector up to sign). The
// representative is the first class member in enumeration order; the
// count equals D_{n;i,j}.
std::vector<Orthocell> enumerate_effective(int n, int i, int j);

// D_{n;i,j} = C(n,i)C(n,j) - C(n,i-1)C(n,j+1) for i <= j (swapped
// otherwise); out-of-range binomials are zero.
long long dim_formula(int n, int i, int j);

// The ij-normal representative: roots ordered by increasing b, the a's
// placed at positions i-d+1..i, the b's reversed at positions j+1..j+d,
// and the three remaining blocks sorted descending. Requires C
// monogressive and ij-effective, i <= j.
Orthocell ij_normalize(const Orthocell& c, int i, int j);

// Number of distinct ij-normal forms; accepts the degenerate boundary
// levels i = 0 and j = n as rank-0 block counts.
long long count_ij_normal(int n, int i, int j);

// All cells C(s_L w; subset of remaining roots), canonicalized and
// deduplicated.
std::vector<Orthocell> subcells(const Orthocell& c);

// e.g. "C((1,3)(2,5); [2 1 3 5 4])"
std::string cell_str(const Orthocell& c);

void to_json(nlohmann::json& j, const Orthocell& c);
void from_json(const nlohmann::json& j, Orthocell& c);

}  // namespace qflag
