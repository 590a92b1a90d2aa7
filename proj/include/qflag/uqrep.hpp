#pragma once

#include <map>
#include <string>
#include <vector>

#include "qflag/laurent.hpp"
#include "qflag/weyl.hpp"

namespace qflag {

// Sorted exterior basis element e_{j_1} ^ ... ^ e_{j_i}, j_1 < ... < j_i.
struct ExtBasisElement {
    std::vector<int> indices;

    int level() const { return static_cast<int>(indices.size()); }
    auto operator<=>(const ExtBasisElement&) const = default;
    std::string str() const;
};

// The sorted representative of e_{w(1)} ^ ... ^ e_{w(i)} together with the
// sign of the sorting permutation. All sign bookkeeping for the
// permutation-labelled basis goes through here.
std::pair<ExtBasisElement, int> signed_basis(const Permutation& w, int i);
std::pair<ExtBasisElement, int> signed_basis(std::vector<int> indices);

// Sparse exact vector in V^{i_1} (x) ... (x) V^{i_m} over tuples of sorted
// exterior basis elements. Arity 1 covers plain module vectors.
template <class Scalar>
struct BasicTensor {
    std::vector<int> levels;
    std::map<std::vector<ExtBasisElement>, Scalar> terms;

    explicit BasicTensor(std::vector<int> lv = {}) : levels(std::move(lv)) {}

    bool is_zero() const { return terms.empty(); }
    int arity() const { return static_cast<int>(levels.size()); }

    void add(const std::vector<ExtBasisElement>& key, const Scalar& c) {
        if (c == Scalar(0)) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == Scalar(0)) terms.erase(it);
        }
    }

    BasicTensor& operator+=(const BasicTensor& o) {
        for (const auto& [k, c] : o.terms) add(k, c);
        return *this;
    }
    BasicTensor& operator-=(const BasicTensor& o) {
        for (const auto& [k, c] : o.terms) add(k, Scalar(0) - c);
        return *this;
    }
    friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
    friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
    BasicTensor operator*(const Scalar& s) const {
        BasicTensor r(levels);
        for (const auto& [k, c] : terms) r.add(k, c * s);
        return r;
    }
    bool operator==(const BasicTensor& o) const {
        return levels == o.levels && terms == o.terms;
    }
};

using TensorVector = BasicTensor<Laurent>;
using ModuleVector = TensorVector;  // arity 1
using RationalTensor = BasicTensor<Rational>;

RationalTensor eval_tensor(const TensorVector& v, const Rational& q0);

// Basis vector builders.
TensorVector basis_vector(const Permutation& w, int i);  // e_w^i with sign resolved
TensorVector unit_tensor(const std::vector<int>& levels,
                         const std::vector<Permutation>& ws);

enum class GenKind { K, Kinv, X, Y };

// Chevalley-style generator attached to the simple root (beta, beta+1).
struct Generator {
    GenKind kind;
    int beta;  // 1 <= beta <= n-1

    std::string str() const;
};

// Action on a single module V^i (arity-1 tensor).
ModuleVector act(const Generator& g, const ModuleVector& v, int n);

// Action through the iterated comultiplication on any arity:
//   K   -> K (x) ... (x) K
//   X   -> sum_p K^(p) (x) X (x) 1^(rest)
//   Y   -> sum_p 1^(p) (x) Y (x) Kinv^(rest)
// Coassociativity makes the grouping immaterial; tests assert this.
TensorVector act_tensor(const Generator& g, const TensorVector& v, int n);

struct CheckReport {
    std::vector<std::string> failures;
    long long checks = 0;

    bool ok() const { return failures.empty(); }
    void require(bool cond, const std::string& what) {
        ++checks;
        if (!cond) failures.push_back(what);
    }
    void merge(const CheckReport& o) {
        checks += o.checks;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

// Checks every defining relation of U_q(sl_n) (K-group relations, KX/KY
// conjugation, the XY commutator with exact division by q - q^-1, both
// Serre families) as an operator identity on the full basis of the given
// (tensor) module.
CheckReport verify_relations(int n, const std::vector<int>& levels);

// True iff X_beta v = 0 for all simple beta and v is a K_beta-eigenvector
// for all beta.
bool is_highest_weight(const TensorVector& v, int n);

// Enumerates the full basis of the tensor module with the given levels,
// in lexicographic order of index tuples.
std::vector<std::vector<ExtBasisElement>> tensor_basis(int n, const std::vector<int>& levels);

// Position of a basis tuple in tensor_basis order.
long long tensor_basis_index(int n, const std::vector<int>& levels,
                             const std::vector<ExtBasisElement>& key);
long long tensor_dim(int n, const std::vector<int>& levels);

}  // namespace qflag
