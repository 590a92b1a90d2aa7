#include "qflag/geometry.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace qflag {

namespace {

std::vector<int> effective_indices(const Orthocell& c, int i) {
    std::vector<int> out;
    for (int k = 0; k < c.rank(); ++k)
        if (pairing(c.w, i, c.roots[k]) != 0) out.push_back(k);
    return out;
}

void validate_point(const CellPoint& p) {
    if (static_cast<int>(p.coords.size()) != p.cell.rank())
        throw std::invalid_argument("coordinate count differs from cell rank");
    for (const auto& [x, y] : p.coords)
        if (x == 0 && y == 0) throw std::invalid_argument("coordinate pair (0,0)");
}

}  // namespace

RationalTensor pluecker(const CellPoint& p, int i) {
    validate_point(p);
    const auto eff = effective_indices(p.cell, i);
    RationalTensor out({i});
    for (unsigned mask = 0; mask < (1u << eff.size()); ++mask) {
        Rational coef = 1;
        Permutation base = p.cell.w;
        for (size_t t = 0; t < eff.size(); ++t) {
            if (mask & (1u << t)) {
                coef *= p.coords[eff[t]].second;
                base = left_multiply(p.cell.roots[eff[t]], base);
            } else {
                coef *= p.coords[eff[t]].first;
            }
        }
        auto [e, sign] = signed_basis(base, i);
        out.add({e}, coef * sign);
    }
    return out;
}

CellPoint sigma(const CellPoint& p, int i, const Rational& q0) {
    validate_point(p);
    if (q0 == 0 || q0 == 1 || q0 == -1) throw std::invalid_argument("degenerate q0");
    CellPoint out = p;
    for (int k = 0; k < p.cell.rank(); ++k)
        if (pairing(p.cell.w, i, p.cell.roots[k]) != 0) out.coords[k].second *= q0;
    return out;
}

RationalTensor segre_pair(const CellPoint& p, int i, int j, const Rational& q0) {
    RationalTensor vi = pluecker(p, i);
    RationalTensor vj = pluecker(sigma(p, i, q0), j);
    RationalTensor out({i, j});
    for (const auto& [ka, ca] : vi.terms)
        for (const auto& [kb, cb] : vj.terms) out.add({ka[0], kb[0]}, ca * cb);
    return out;
}

namespace {

std::vector<Rational> dense_rational(const RationalTensor& v, int n) {
    std::vector<Rational> out(tensor_dim(n, v.levels), Rational(0));
    for (const auto& [k, c] : v.terms)
        out[tensor_basis_index(n, v.levels, k)] = c;
    return out;
}

// Subset expansion of the Segre image into effective subcell e-vectors:
// sum over I,J disjoint in the both-effective roots, L' in the i-only
// roots, M' in the j-only roots, of
//   q^|J| (x_{(I u J)bar})^2 x_I x_{L'bar} x_{M'bar} y_I y_J^2 y_L' y_M'
//   e_{C(alpha_I; s_J s_L' s_M' w)}
RationalTensor subset_expansion(const CellPoint& p, int i, int j, const Rational& q0) {
    const Orthocell& c = p.cell;
    std::vector<int> both, ionly, jonly;
    for (int k = 0; k < c.rank(); ++k) {
        bool ei = pairing(c.w, i, c.roots[k]) != 0;
        bool ej = pairing(c.w, j, c.roots[k]) != 0;
        if (ei && ej) both.push_back(k);
        else if (ei) ionly.push_back(k);
        else if (ej) jonly.push_back(k);
    }
    RationalTensor out({i, j});
    // Dropping s_k from the label of the factor it does not move (the
    // closed form names the cell at base s_J s_{L'} s_{M'} w for both
    // factors) costs the wedge sign of s_k inside that factor's window:
    // -1 when both endpoints lie inside it, +1 when both lie outside.
    const auto si = c.w.weight_set(i), sj = c.w.weight_set(j);
    std::vector<int> ionly_sign, jonly_sign;
    for (int k : ionly) ionly_sign.push_back(sj.count(c.roots[k].a) ? -1 : 1);
    for (int k : jonly) jonly_sign.push_back(si.count(c.roots[k].a) ? -1 : 1);
    std::vector<int> state(both.size());  // 0: neither, 1: in I, 2: in J
    auto emit = [&]() {
        Rational coef = 1;
        Permutation base = c.w;
        std::vector<PositiveRoot> iroots;
        for (size_t t = 0; t < both.size(); ++t) {
            const auto& [x, y] = p.coords[both[t]];
            if (state[t] == 0) coef *= x * x;
            else if (state[t] == 1) {
                coef *= x * y;
                iroots.push_back(c.roots[both[t]]);
            } else {
                coef *= q0 * y * y;
                base = left_multiply(c.roots[both[t]], base);
            }
        }
        for (unsigned lm = 0; lm < (1u << ionly.size()); ++lm) {
            Rational cl = coef;
            Permutation bl = base;
            for (size_t t = 0; t < ionly.size(); ++t) {
                const auto& [x, y] = p.coords[ionly[t]];
                if (lm & (1u << t)) {
                    cl *= y * ionly_sign[t];
                    bl = left_multiply(c.roots[ionly[t]], bl);
                } else {
                    cl *= x;
                }
            }
            for (unsigned mm = 0; mm < (1u << jonly.size()); ++mm) {
                Rational cm = cl;
                Permutation bm = bl;
                for (size_t t = 0; t < jonly.size(); ++t) {
                    const auto& [x, y] = p.coords[jonly[t]];
                    if (mm & (1u << t)) {
                        cm *= y * jonly_sign[t];
                        bm = left_multiply(c.roots[jonly[t]], bm);
                    } else {
                        cm *= x;
                    }
                }
                RationalTensor term =
                    eval_tensor(e_vector_at(c.n, iroots, bm, i, j), q0);
                for (const auto& [k2, c2] : term.terms) out.add(k2, c2 * cm);
            }
        }
    };
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == both.size()) {
            emit();
            return;
        }
        for (int s = 0; s < 3; ++s) {
            state[t] = s;
            rec(t + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

CheckReport check_spanned(int n, int i, int j, int samples, unsigned long long seed,
                          const Rational& q0) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    CheckReport rep;
    const SpanBasis& sb = span_basis(n, i, j);
    std::vector<std::vector<Rational>> cols;
    for (const auto& v : sb.vectors)
        cols.push_back(dense_rational(eval_tensor(v, q0), n));
    SpanSolver<Rational> solver(std::move(cols));
    rep.require(solver.independent() && solver.rank() == sb.cells.size(),
                "evaluated e-vectors independent");

    std::vector<std::vector<Rational>> phis;
    for (const auto& phi : quadratic_relations(n, i, j).type_one) {
        std::vector<Rational> ev;
        for (const auto& c : phi) ev.push_back(c.num().eval(q0) / c.den().eval(q0));
        phis.push_back(std::move(ev));
    }

    const auto cells = enumerate_monogressive(n);
    for (size_t ci = 0; ci < cells.size(); ++ci) {
        const Orthocell& c = cells[ci];
        std::seed_seq sq{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32),
                         static_cast<unsigned>(ci)};
        std::mt19937_64 rng(sq);
        auto draw = [&]() { return static_cast<int>(rng() % 19) - 9; };
        const std::string tag = cell_str(c) + " (" + std::to_string(i) + "," +
                                std::to_string(j) + ")";
        for (int s = 0; s < samples; ++s) {
            CellPoint p{c, {}};
            for (int k = 0; k < c.rank(); ++k) {
                int x = draw(), y = draw();
                while (x == 0 && y == 0) { x = draw(); y = draw(); }
                p.coords.emplace_back(Rational(x), Rational(y));
            }
            RationalTensor img = segre_pair(p, i, j, q0);
            rep.require(solver.contains(dense_rational(img, n)),
                        "segre image in span " + tag + " sample " + std::to_string(s));
            bool ann = true;
            auto dense = dense_rational(img, n);
            for (const auto& phi : phis) {
                Rational v = 0;
                for (size_t t = 0; t < dense.size(); ++t) v += phi[t] * dense[t];
                ann = ann && (v == 0);
            }
            rep.require(ann, "type-I annihilation " + tag + " sample " + std::to_string(s));
            try {
                rep.require(img == subset_expansion(p, i, j, q0),
                            "subset expansion " + tag + " sample " + std::to_string(s));
            } catch (const std::invalid_argument& e) {
                rep.require(false, "subset expansion target " + tag + ": " + e.what());
            }
        }
    }
    return rep;
}

std::map<std::pair<Rational, Rational>, int> component_ratios(const Rational& q0) {
    std::map<std::pair<Rational, Rational>, int> out;
    for (const auto& c : enumerate_monogressive(3, 1)) {
        Rational r1 = pairing(c.w, 1, c.roots[0]) != 0 ? q0 : Rational(1);
        Rational r2 = pairing(c.w, 2, c.roots[0]) != 0 ? q0 : Rational(1);
        ++out[{r1, r2}];
    }
    return out;
}

CheckReport gluing_check(const Orthocell& c, int i) {
    CheckReport rep;
    const unsigned d = static_cast<unsigned>(c.rank());
    for (unsigned lmask = 0; lmask < (1u << d); ++lmask) {
        Permutation base = c.w;
        for (unsigned k = 0; k < d; ++k)
            if (lmask & (1u << k)) base = left_multiply(c.roots[k], base);
        for (unsigned k = 0; k < d; ++k) {
            if (lmask & (1u << k)) continue;
            rep.require(pairing(base, i, c.roots[k]) == pairing(c.w, i, c.roots[k]),
                        "pairing invariance " + cell_str(c) + " L=" +
                            std::to_string(lmask) + " root " + std::to_string(k));
        }
    }
    return rep;
}

void to_json(nlohmann::json& j, const CellPoint& p) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& [x, y] : p.coords)
        coords.push_back({to_string(x), to_string(y)});
    j = nlohmann::json{{"cell", p.cell}, {"coords", coords}};
}

void from_json(const nlohmann::json& j, CellPoint& p) {
    p.cell = j.at("cell").get<Orthocell>();
    p.coords.clear();
    for (const auto& pr : j.at("coords")) {
        p.coords.emplace_back(parse_rational(pr.at(0).get<std::string>()),
                              parse_rational(pr.at(1).get<std::string>()));
    }
    validate_point(p);
}

}  // namespace qflag
