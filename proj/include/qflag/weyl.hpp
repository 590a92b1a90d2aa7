#pragma once

#include <set>
#include <vector>

#include "qflag/json_fwd.hpp"

namespace qflag {

// Element of S_n in one-line notation [w(1) ... w(n)], values 1-based.
struct Permutation {
    std::vector<int> entries;

    Permutation() = default;
    explicit Permutation(std::vector<int> e);  // validates

    int n() const { return static_cast<int>(entries.size()); }
    int operator()(int pos) const { return entries[pos - 1]; }  // 1-based
    static Permutation identity(int n);

    int length() const;  // inversion count

    // The weight set {w(1),...,w(i)} representing w.omega_i.
    std::set<int> weight_set(int i) const;

    auto operator<=>(const Permutation&) const = default;
};

// Positive root of SL(n), identified with the transposition (a b), a < b.
struct PositiveRoot {
    int a = 0, b = 0;

    PositiveRoot() = default;
    PositiveRoot(int a_, int b_);  // validates a < b

    bool is_simple() const { return b == a + 1; }
    auto operator<=>(const PositiveRoot&) const = default;
};

// s_alpha o w: each entry equal to a becomes b and vice versa.
Permutation left_multiply(const PositiveRoot& root, const Permutation& w);

// Array criterion for the Bruhat cover w <. s_alpha w: a appears left of b
// and every value between them in the array lies outside [a, b].
bool bruhat_covers(const Permutation& w, const PositiveRoot& root);

// (w.omega_i | alpha) in {-1, 0, 1}, computed as [a in S] - [b in S] with
// S = {w(1),...,w(i)}; valid because all fundamental weights of SL(n) are
// minuscule.
int pairing(const Permutation& w, int i, const PositiveRoot& root);

// (alpha | alpha') in {-1, 0, 1, 2} by support overlap.
int root_pairing(const PositiveRoot& x, const PositiveRoot& y);

// s_alpha . {w(1),...,w(i)} as a set of values.
std::set<int> reflect_weight(const PositiveRoot& root, const Permutation& w, int i);
std::set<int> reflect_weight(const PositiveRoot& root, const std::set<int>& s);

void to_json(nlohmann::json& j, const Permutation& w);
void from_json(const nlohmann::json& j, Permutation& w);
void to_json(nlohmann::json& j, const PositiveRoot& r);
void from_json(const nlohmann::json& j, PositiveRoot& r);

}  // namespace qflag
