#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/orthocell.hpp"
#include "qflag/uqrep.hpp"

namespace qflag {

// e_C^{ij} = sum_L q^|L| e^i_{s_Lbar w} (x) e^j_{s_L w} over subsets L of
// the defining roots, built on the cell's minimal representative.
TensorVector e_vector(const Orthocell& c, int i, int j);

// Same sum built on an explicitly named representative. Throws unless the
// cell C(roots; base) is monogressive (by the array criterion, which also
// certifies that base is the minimal representative) and ij-effective.
TensorVector e_vector_at(int n, std::vector<PositiveRoot> roots,
                         const Permutation& base, int i, int j);

// The e-basis of V^{ij}: one vector per monogressive ij-effective cell,
// with a reusable membership solver over the fraction field.
struct SpanBasis {
    int n = 0, i = 0, j = 0;
    std::vector<Orthocell> cells;
    std::vector<TensorVector> vectors;
    SpanSolver<LaurentFrac> solver;
    long long ambient = 0;

    std::vector<int> levels() const { return {i, j}; }
};

// Builds (and memoizes) the span basis; throws if the e-vectors fail to
// be independent of count D_{n;i,j}.
const SpanBasis& span_basis(int n, int i, int j);

std::vector<LaurentFrac> dense_coords(const TensorVector& v, int n);
std::optional<std::vector<LaurentFrac>> express_in(const SpanBasis& sb, const TensorVector& v);

// Closure check: every generator maps every e_C^{ij} into the
// e-span with Laurent-polynomial coefficients.
CheckReport check_closure(int n, int i, int j);

// K_beta acts on e_C^{ij} by q^((w(omega_i+omega_j)|beta) - sum_k (alpha_k|beta)).
bool k_eigen_check(const Orthocell& c, int i, int j, int beta);

// Exhaustive comparison of the closed-form case tables for X_beta e_C^{ij}
// and Y_beta e_C^{ij} against the direct comultiplication action,
// including monogressivity/effectiveness of every named target cell and
// the impossibility of the excluded subcases.
CheckReport verify_case_tables(int n, int i, int j);

// R^{ji}: V^{ji} -> V^{ij}, e_C^{ji} |-> e_C^{ij} (identity when the two
// levels agree). Throws on membership failure.
TensorVector r_map(int n, const TensorVector& v);

CheckReport verify_intertwiner(int n, int i, int j);

// Basis of W^{ijk} = V^{ij} (x) V^k  intersect  V^i (x) V^{jk}, the top
// component of the triple tensor product.
std::vector<TensorVector> w_submodule(int n, int i, int j, int k);

// Cross-check route: cyclic generation of the same submodule from the
// highest weight vector under the lowering operators.
std::vector<TensorVector> w_submodule_cyclic(int n, int i, int j, int k);

// Both braid composites on a basis of W^{kji}, with span-membership
// asserted for every intermediate slice.
CheckReport verify_braid(int n, int i, int j, int k);

// Quadratic relation data of the shape algebra in degree omega_i+omega_j.
struct RelationSet {
    int n = 0, i = 0, j = 0;
    // Type I: basis of the annihilator of V^{ij} in the dual tensor
    // space, in dense dual coordinates (tensor_basis order), normalized
    // so the lexicographically first nonzero coefficient is 1.
    std::vector<std::vector<LaurentFrac>> type_one;
    // Type II: the matrix of R^{ji} on the e-basis, canonical cell order.
    std::vector<std::vector<LaurentFrac>> type_two;
};

RelationSet quadratic_relations(int n, int i, int j);

// <phi, v> with phi in dense dual coordinates.
Rational dual_pair(const std::vector<Rational>& phi, const RationalTensor& v, int n);

// Human-readable form x_{S} (x) x_{T} ... of a type-I relation.
std::string relation_str(int n, int i, int j, const std::vector<LaurentFrac>& phi);

}  // namespace qflag
