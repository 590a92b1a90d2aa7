#include "qflag/uqrep.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qflag {

std::string ExtBasisElement::str() const {
    std::string s = "{";
    for (size_t k = 0; k < indices.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(indices[k]);
    }
    return s + "}";
}

std::pair<ExtBasisElement, int> signed_basis(std::vector<int> indices) {
    ExtBasisElement e{std::move(indices)};
    int sign = 1;
    // insertion sort, tracking the parity of the sorting permutation
    auto& v = e.indices;
    for (size_t p = 1; p < v.size(); ++p) {
        int x = v[p];
        size_t q = p;
        while (q > 0 && v[q - 1] > x) {
            v[q] = v[q - 1];
            --q;
            sign = -sign;
        }
        v[q] = x;
    }
    for (size_t p = 1; p < v.size(); ++p)
        if (v[p] == v[p - 1]) throw std::invalid_argument("repeated wedge index");
    return {e, sign};
}

std::pair<ExtBasisElement, int> signed_basis(const Permutation& w, int i) {
    return signed_basis(std::vector<int>(w.entries.begin(), w.entries.begin() + i));
}

TensorVector basis_vector(const Permutation& w, int i) {
    auto [e, sign] = signed_basis(w, i);
    TensorVector v({i});
    v.add({e}, Laurent(sign));
    return v;
}

TensorVector unit_tensor(const std::vector<int>& levels,
                         const std::vector<Permutation>& ws) {
    if (levels.size() != ws.size()) throw std::invalid_argument("levels/ws mismatch");
    TensorVector v(levels);
    std::vector<ExtBasisElement> key;
    int sign = 1;
    for (size_t f = 0; f < ws.size(); ++f) {
        auto [e, s] = signed_basis(ws[f], levels[f]);
        key.push_back(e);
        sign *= s;
    }
    v.add(key, Laurent(sign));
    return v;
}

RationalTensor eval_tensor(const TensorVector& v, const Rational& q0) {
    RationalTensor r(v.levels);
    for (const auto& [k, c] : v.terms) r.add(k, c.eval(q0));
    return r;
}

std::string Generator::str() const {
    static const char* names[] = {"K", "Kinv", "X", "Y"};
    return std::string(names[static_cast<int>(kind)]) + "_" + std::to_string(beta);
}

namespace {

// (e.weight | beta) for the sorted element e: [c in S] - [c+1 in S].
int elem_pairing(const ExtBasisElement& e, int c) {
    int r = 0;
    for (int v : e.indices) {
        if (v == c) ++r;
        if (v == c + 1) --r;
    }
    return r;
}

// X_beta / Y_beta on a single sorted element; returns (element, sign) or
// nullopt when the generator kills it. On a sorted element the swap
// c <-> c+1 keeps the indices sorted, so the sign is always +1.
std::optional<std::pair<ExtBasisElement, int>> raise_lower(const ExtBasisElement& e,
                                                           int c, bool lower) {
    int p = elem_pairing(e, c);
    if ((lower && p != 1) || (!lower && p != -1)) return std::nullopt;
    std::vector<int> idx = e.indices;
    for (int& v : idx) {
        if (v == c) v = c + 1;
        else if (v == c + 1) v = c;
    }
    return signed_basis(std::move(idx));
}

}  // namespace

TensorVector act_tensor(const Generator& g, const TensorVector& v, int n) {
    if (g.beta < 1 || g.beta >= n) throw std::invalid_argument("generator root must be simple");
    const int c = g.beta;
    const int m = v.arity();
    TensorVector out(v.levels);
    for (const auto& [key, coeff] : v.terms) {
        switch (g.kind) {
            case GenKind::K:
            case GenKind::Kinv: {
                int e = 0;
                for (const auto& f : key) e += elem_pairing(f, c);
                if (g.kind == GenKind::Kinv) e = -e;
                out.add(key, coeff * Laurent::q(e));
                break;
            }
            case GenKind::X: {
                // Delta^(m-1) X = sum_p K^(x p) (x) X (x) 1^(rest)
                for (int p = 0; p < m; ++p) {
                    auto hit = raise_lower(key[p], c, /*lower=*/false);
                    if (!hit) continue;
                    int kexp = 0;
                    for (int f = 0; f < p; ++f) kexp += elem_pairing(key[f], c);
                    auto nkey = key;
                    nkey[p] = hit->first;
                    out.add(nkey, coeff * Laurent::q(kexp, hit->second));
                }
                break;
            }
            case GenKind::Y: {
                // Delta^(m-1) Y = sum_p 1^(x p) (x) Y (x) Kinv^(rest)
                for (int p = 0; p < m; ++p) {
                    auto hit = raise_lower(key[p], c, /*lower=*/true);
                    if (!hit) continue;
                    int kexp = 0;
                    for (int f = p + 1; f < m; ++f) kexp -= elem_pairing(key[f], c);
                    auto nkey = key;
                    nkey[p] = hit->first;
                    out.add(nkey, coeff * Laurent::q(kexp, hit->second));
                }
                break;
            }
        }
    }
    return out;
}

ModuleVector act(const Generator& g, const ModuleVector& v, int n) {
    if (v.arity() != 1) throw std::invalid_argument("act expects a single-module vector");
    return act_tensor(g, v, n);
}

std::vector<std::vector<ExtBasisElement>> tensor_basis(int n, const std::vector<int>& levels) {
    std::vector<std::vector<ExtBasisElement>> out;
    std::vector<std::vector<ExtBasisElement>> per_factor;
    for (int lv : levels) {
        std::vector<ExtBasisElement> elems;
        std::vector<int> idx(lv);
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (pos == lv) {
                elems.push_back(ExtBasisElement{idx});
                return;
            }
            for (int v = from; v <= n - (lv - pos - 1); ++v) {
                idx[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 1);
        per_factor.push_back(std::move(elems));
    }
    std::vector<ExtBasisElement> key(levels.size());
    std::function<void(size_t)> build = [&](size_t f) {
        if (f == levels.size()) {
            out.push_back(key);
            return;
        }
        for (const auto& e : per_factor[f]) {
            key[f] = e;
            build(f + 1);
        }
    };
    build(0);
    return out;
}

namespace {

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// Lexicographic rank of a sorted subset among all size-i subsets of 1..n.
long long subset_rank(int n, const std::vector<int>& s) {
    long long r = 0;
    int prev = 0;
    const int i = static_cast<int>(s.size());
    for (int pos = 0; pos < i; ++pos) {
        for (int v = prev + 1; v < s[pos]; ++v)
            r += binom_ll(n - v, i - pos - 1);
        prev = s[pos];
    }
    return r;
}

}  // namespace

long long tensor_dim(int n, const std::vector<int>& levels) {
    long long d = 1;
    for (int lv : levels) d *= binom_ll(n, lv);
    return d;
}

long long tensor_basis_index(int n, const std::vector<int>& levels,
                             const std::vector<ExtBasisElement>& key) {
    long long idx = 0;
    for (size_t f = 0; f < levels.size(); ++f)
        idx = idx * binom_ll(n, levels[f]) + subset_rank(n, key[f].indices);
    return idx;
}

namespace {

using Op = std::function<TensorVector(const TensorVector&)>;

Op gen_op(GenKind kind, int beta, int n) {
    return [=](const TensorVector& v) { return act_tensor(Generator{kind, beta}, v, n); };
}

bool adjacent(int b, int c) { return b == c + 1 || c == b + 1; }

int simple_pairing(int b, int c) {
    if (b == c) return 2;
    return adjacent(b, c) ? -1 : 0;
}

}  // namespace

CheckReport verify_relations(int n, const std::vector<int>& levels) {
    CheckReport rep;
    const Laurent qdiff = Laurent::q(1) - Laurent::q(-1);
    auto basis = tensor_basis(n, levels);
    auto name = [&](const std::string& rel, const std::vector<ExtBasisElement>& key) {
        std::string s = rel + " @ ";
        for (const auto& e : key) s += e.str();
        return s;
    };
    for (const auto& key : basis) {
        TensorVector v(levels);
        v.add(key, Laurent(1));
        for (int b = 1; b < n; ++b) {
            Op K = gen_op(GenKind::K, b, n), Ki = gen_op(GenKind::Kinv, b, n);
            Op X = gen_op(GenKind::X, b, n), Y = gen_op(GenKind::Y, b, n);
            rep.require(K(Ki(v)) == v && Ki(K(v)) == v,
                        name("K_" + std::to_string(b) + " Kinv", key));
            for (int c = 1; c < n; ++c) {
                Op Kc = gen_op(GenKind::K, c, n);
                Op Xc = gen_op(GenKind::X, c, n), Yc = gen_op(GenKind::Y, c, n);
                std::string bc = std::to_string(b) + "," + std::to_string(c);
                rep.require(K(Kc(v)) == Kc(K(v)), name("KK commute " + bc, key));
                rep.require(K(Xc(Ki(v))) == Xc(v) * Laurent::q(simple_pairing(b, c)),
                            name("K X Kinv " + bc, key));
                rep.require(K(Yc(Ki(v))) == Yc(v) * Laurent::q(-simple_pairing(b, c)),
                            name("K Y Kinv " + bc, key));
                // [X_b, Y_c] = delta_bc (K_b - Kinv_b)/(q - q^-1)
                TensorVector lhs = X(Yc(v)) - Yc(X(v));
                TensorVector rhs(levels);
                if (b == c) {
                    TensorVector kv = K(v) - Ki(v);
                    for (const auto& [k2, c2] : kv.terms)
                        rhs.add(k2, c2.exact_div(qdiff));
                }
                rep.require(lhs == rhs, name("XY commutator " + bc, key));
                if (c != b) {
                    if (adjacent(b, c)) {
                        const Laurent two_q = Laurent::q(1) + Laurent::q(-1);
                        TensorVector sx = X(X(Xc(v))) - (X(Xc(X(v)))) * two_q + Xc(X(X(v)));
                        TensorVector sy = Y(Y(Yc(v))) - (Y(Yc(Y(v)))) * two_q + Yc(Y(Y(v)));
                        rep.require(sx.is_zero(), name("Serre X " + bc, key));
                        rep.require(sy.is_zero(), name("Serre Y " + bc, key));
                    } else {
                        rep.require(X(Xc(v)) == Xc(X(v)), name("XX commute " + bc, key));
                        rep.require(Y(Yc(v)) == Yc(Y(v)), name("YY commute " + bc, key));
                    }
                }
            }
        }
    }
    return rep;
}

bool is_highest_weight(const TensorVector& v, int n) {
    if (v.is_zero()) return false;
    for (int b = 1; b < n; ++b) {
        if (!act_tensor(Generator{GenKind::X, b}, v, n).is_zero()) return false;
        // K_b acts diagonally; eigenvector iff all terms share one exponent
        std::optional<int> exp;
        for (const auto& [key, c] : v.terms) {
            int e = 0;
            for (const auto& f : key) {
                for (int u : f.indices) {
                    if (u == b) ++e;
                    if (u == b + 1) --e;
                }
            }
            if (!exp) exp = e;
            else if (*exp != e) return false;
        }
    }
    return true;
}

}  // namespace qflag
