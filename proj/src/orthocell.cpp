#include "qflag/orthocell.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qflag {

namespace {

bool root_order(const PositiveRoot& x, const PositiveRoot& y) {
    return std::pair(x.b, x.a) < std::pair(y.b, y.a);
}

long long binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

Permutation apply_subset(const Orthocell& c, unsigned mask) {
    Permutation v = c.w;
    for (int k = 0; k < c.rank(); ++k)
        if (mask & (1u << k)) v = left_multiply(c.roots[k], v);
    return v;
}

}  // namespace

Orthocell make_cell(int n, std::vector<PositiveRoot> roots, const Permutation& w) {
    if (w.n() != n) throw std::invalid_argument("permutation size mismatch");
    for (size_t x = 0; x < roots.size(); ++x) {
        if (roots[x].b > n) throw std::invalid_argument("root out of range");
        for (size_t y = x + 1; y < roots.size(); ++y) {
            if (roots[x] == roots[y]) throw std::invalid_argument("duplicate root");
            if (root_pairing(roots[x], roots[y]) != 0)
                throw std::invalid_argument("non-orthogonal root pair");
        }
    }
    std::sort(roots.begin(), roots.end(), root_order);
    Orthocell c{n, std::move(roots), w};
    // Minimal-length representative by exhaustive scan over the 2^d coset
    // elements; ties broken by lexicographically smallest array.
    Permutation best = c.w;
    int best_len = best.length();
    const unsigned d = static_cast<unsigned>(c.rank());
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        Permutation v = apply_subset(c, mask);
        int len = v.length();
        if (len < best_len || (len == best_len && v.entries < best.entries)) {
            best = v;
            best_len = len;
        }
    }
    c.w = std::move(best);
    return c;
}

std::vector<Permutation> coset_elements(const Orthocell& c) {
    std::vector<Permutation> out;
    const unsigned d = static_cast<unsigned>(c.rank());
    out.reserve(1u << d);
    for (unsigned mask = 0; mask < (1u << d); ++mask)
        out.push_back(apply_subset(c, mask));
    return out;
}

bool is_monogressive(const Orthocell& c) {
    const int base = c.w.length();
    const unsigned d = static_cast<unsigned>(c.rank());
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        if (apply_subset(c, mask).length() != base + __builtin_popcount(mask))
            return false;
    }
    return true;
}

bool is_monogressive_by_array(const Orthocell& c) {
    const int n = c.n;
    std::vector<int> pos(n + 1);
    for (int p = 0; p < n; ++p) pos[c.w.entries[p]] = p;
    // partner[v] = the other endpoint when v belongs to a defining root
    std::vector<int> partner(n + 1, 0);
    for (const auto& r : c.roots) {
        partner[r.a] = r.b;
        partner[r.b] = r.a;
    }
    for (const auto& r : c.roots) {
        int pa = pos[r.a], pb = pos[r.b];
        if (pa > pb) return false;
        for (int p = pa + 1; p < pb; ++p) {
            int cval = c.w.entries[p];
            if (r.a < cval && cval < r.b) return false;
            int other = partner[cval];
            if (other != 0 && cval != r.a && cval != r.b &&
                r.a < other && other < r.b)
                return false;
        }
    }
    return true;
}

bool is_effective(const Orthocell& c, int i) {
    for (const auto& r : c.roots)
        if (pairing(c.w, i, r) == 0) return false;
    return true;
}

bool is_ij_effective(const Orthocell& c, int i, int j) {
    return is_effective(c, i) && is_effective(c, j);
}

namespace {

// Recursively extends a set of pairwise-disjoint roots, keeping the
// canonical (b,a) order, and emits every monogressive cell whose minimal
// representative is w. (from_b, from_a) is the last root added; only
// roots strictly after it in (b,a) order are considered.
void extend_roots(int n, const Permutation& w, std::vector<PositiveRoot>& acc,
                  std::vector<bool>& used, int from_b, int from_a,
                  std::optional<int> rank, std::vector<Orthocell>& out) {
    if (!rank || static_cast<int>(acc.size()) == *rank) {
        Orthocell c{n, acc, w};
        if (is_monogressive_by_array(c)) out.push_back(c);
        if (rank) return;
    }
    for (int b = from_b; b <= n; ++b) {
        for (int a = (b == from_b ? from_a + 1 : 1); a < b; ++a) {
            if (used[a] || used[b]) continue;
            acc.emplace_back(a, b);
            used[a] = used[b] = true;
            extend_roots(n, w, acc, used, b, a, rank, out);
            used[a] = used[b] = false;
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<Orthocell> enumerate_monogressive(int n, std::optional<int> rank) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    std::vector<Orthocell> out;
    std::vector<int> arr(n);
    for (int i = 0; i < n; ++i) arr[i] = i + 1;
    do {
        Permutation w{std::vector<int>(arr)};
        std::vector<PositiveRoot> acc;
        std::vector<bool> used(n + 1, false);
        extend_roots(n, w, acc, used, 2, 0, rank, out);
    } while (std::next_permutation(arr.begin(), arr.end()));
    std::sort(out.begin(), out.end(), [](const Orthocell& x, const Orthocell& y) {
        if (x.roots != y.roots) {
            return std::lexicographical_compare(
                x.roots.begin(), x.roots.end(), y.roots.begin(), y.roots.end(),
                root_order);
        }
        return x.w.entries < y.w.entries;
    });
    return out;
}

std::vector<Orthocell> enumerate_effective_all(int n, int i, int j) {
    std::vector<Orthocell> out;
    for (const auto& c : enumerate_monogressive(n))
        if (is_ij_effective(c, i, j)) out.push_back(c);
    return out;
}

std::vector<Orthocell> enumerate_effective(int n, int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    std::set<Orthocell> seen;
    std::vector<Orthocell> out;
    for (const auto& c : enumerate_effective_all(n, i, j))
        if (seen.insert(ij_normalize(c, lo, hi)).second) out.push_back(c);
    return out;
}

long long dim_formula(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return binom(n, i) * binom(n, j) - binom(n, i - 1) * binom(n, j + 1);
}

Orthocell ij_normalize(const Orthocell& c, int i, int j) {
    if (i > j) throw std::invalid_argument("ij_normalize needs i <= j");
    if (!is_monogressive_by_array(c) || !is_ij_effective(c, i, j))
        throw std::invalid_argument("cell must be monogressive and ij-effective");
    const int n = c.n;
    const int d = c.rank();
    std::set<int> si = c.w.weight_set(i), sj = c.w.weight_set(j);
    std::set<int> avals, bvals;
    for (const auto& r : c.roots) {
        // minimality puts a left of b, so effectiveness forces a into the
        // first i values and b out of the first j
        if (!si.count(r.a) || sj.count(r.b))
            throw std::logic_error("effective cell with misplaced root support");
        avals.insert(r.a);
        bvals.insert(r.b);
    }
    auto desc = [](const std::set<int>& s, const std::set<int>& omit) {
        std::vector<int> v;
        for (auto it = s.rbegin(); it != s.rend(); ++it)
            if (!omit.count(*it)) v.push_back(*it);
        return v;
    };
    std::set<int> mid, rest;
    for (int v = 1; v <= n; ++v) {
        if (sj.count(v)) {
            if (!si.count(v)) mid.insert(v);
        } else {
            rest.insert(v);
        }
    }
    std::vector<int> arr;
    arr.reserve(n);
    for (int v : desc(si, avals)) arr.push_back(v);
    for (const auto& r : c.roots) arr.push_back(r.a);  // roots are b-ascending
    for (int v : desc(mid, {})) arr.push_back(v);
    for (int k = d - 1; k >= 0; --k) arr.push_back(c.roots[k].b);
    for (int v : desc(rest, bvals)) arr.push_back(v);
    return Orthocell{n, c.roots, Permutation(std::move(arr))};
}

long long count_ij_normal(int n, int i, int j) {
    if (i > j) throw std::invalid_argument("count_ij_normal needs i <= j");
    if (i < 0 || j > n) return 0;
    if (i == 0) return binom(n, j);
    if (j == n) return binom(n, i);
    std::set<Orthocell> forms;
    for (const auto& c : enumerate_effective_all(n, i, j))
        forms.insert(ij_normalize(c, i, j));
    return static_cast<long long>(forms.size());
}

std::vector<Orthocell> subcells(const Orthocell& c) {
    std::set<Orthocell> out;
    const unsigned d = static_cast<unsigned>(c.rank());
    for (unsigned lmask = 0; lmask < (1u << d); ++lmask) {
        Permutation base = apply_subset(c, lmask);
        for (unsigned rmask = 0; rmask < (1u << d); ++rmask) {
            if (rmask & lmask) continue;
            std::vector<PositiveRoot> sub;
            for (int k = 0; k < static_cast<int>(d); ++k)
                if (rmask & (1u << k)) sub.push_back(c.roots[k]);
            out.insert(make_cell(c.n, std::move(sub), base));
        }
    }
    return std::vector<Orthocell>(out.begin(), out.end());
}

std::string cell_str(const Orthocell& c) {
    std::string s = "C(";
    for (const auto& r : c.roots)
        s += "(" + std::to_string(r.a) + "," + std::to_string(r.b) + ")";
    s += "; [";
    for (size_t p = 0; p < c.w.entries.size(); ++p) {
        if (p) s += " ";
        s += std::to_string(c.w.entries[p]);
    }
    return s + "])";
}

void to_json(nlohmann::json& j, const Orthocell& c) {
    j = nlohmann::json{{"n", c.n}, {"roots", c.roots}, {"w", c.w}};
}

void from_json(const nlohmann::json& j, Orthocell& c) {
    int n = j.at("n").get<int>();
    auto roots = j.at("roots").get<std::vector<PositiveRoot>>();
    auto w = j.at("w").get<Permutation>();
    c = make_cell(n, std::move(roots), w);
}

}  // namespace qflag
