#include "qflag/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qflag {

Permutation::Permutation(std::vector<int> e) : entries(std::move(e)) {
    const int n = static_cast<int>(entries.size());
    if (n < 1) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(n + 1, false);
    for (int v : entries) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    return Permutation(std::move(e));
}

int Permutation::length() const {
    int inv = 0;
    for (size_t p = 0; p < entries.size(); ++p)
        for (size_t q = p + 1; q < entries.size(); ++q)
            if (entries[p] > entries[q]) ++inv;
    return inv;
}

std::set<int> Permutation::weight_set(int i) const {
    if (i < 0 || i > n()) throw std::invalid_argument("bad level");
    return std::set<int>(entries.begin(), entries.begin() + i);
}

PositiveRoot::PositiveRoot(int a_, int b_) : a(a_), b(b_) {
    if (!(1 <= a && a < b)) throw std::invalid_argument("positive root needs 1 <= a < b");
}

Permutation left_multiply(const PositiveRoot& root, const Permutation& w) {
    Permutation r = w;
    for (int& v : r.entries) {
        if (v == root.a) v = root.b;
        else if (v == root.b) v = root.a;
    }
    return r;
}

bool bruhat_covers(const Permutation& w, const PositiveRoot& root) {
    int pa = -1, pb = -1;
    for (int p = 0; p < w.n(); ++p) {
        if (w.entries[p] == root.a) pa = p;
        if (w.entries[p] == root.b) pb = p;
    }
    if (pa > pb) return false;
    for (int p = pa + 1; p < pb; ++p) {
        int c = w.entries[p];
        if (root.a < c && c < root.b) return false;
    }
    return true;
}

int pairing(const Permutation& w, int i, const PositiveRoot& root) {
    if (i < 1 || i > w.n() - 1) throw std::invalid_argument("level out of range");
    bool ina = false, inb = false;
    for (int p = 0; p < i; ++p) {
        if (w.entries[p] == root.a) ina = true;
        if (w.entries[p] == root.b) inb = true;
    }
    return (ina ? 1 : 0) - (inb ? 1 : 0);
}

int root_pairing(const PositiveRoot& x, const PositiveRoot& y) {
    if (x == y) return 2;
    if (x.a == y.b || x.b == y.a) return -1;
    if (x.a == y.a || x.b == y.b) return 1;
    return 0;
}

std::set<int> reflect_weight(const PositiveRoot& root, const std::set<int>& s) {
    std::set<int> r;
    for (int v : s) {
        if (v == root.a) r.insert(root.b);
        else if (v == root.b) r.insert(root.a);
        else r.insert(v);
    }
    return r;
}

std::set<int> reflect_weight(const PositiveRoot& root, const Permutation& w, int i) {
    return reflect_weight(root, w.weight_set(i));
}

void to_json(nlohmann::json& j, const Permutation& w) { j = w.entries; }

void from_json(const nlohmann::json& j, Permutation& w) {
    w = Permutation(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const PositiveRoot& r) { j = {r.a, r.b}; }

void from_json(const nlohmann::json& j, PositiveRoot& r) {
    auto v = j.get<std::vector<int>>();
    if (v.size() != 2) throw std::invalid_argument("root must be [a,b]");
    r = PositiveRoot(v[0], v[1]);
}

}  // namespace qflag
