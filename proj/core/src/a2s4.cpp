#include "slicecert/quotientcases.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

// Generators and relations of C[a2]^{S4} for the outer S4 of sec. 5.4:
// coordinates on the rank-one cone X = {x y^T}, Gamma_4-invariants
// b_i = x_i y_i, c_i = x_{i+1}^2 y_{i-1}^2, d_i = x_{i-1}^2 y_{i+1}^2,
// and the S3-symmetric functions of the columns (lambda_i, c_i, d_i),
// restricted to a2 = {sum b_i = 0}.

namespace slicecert {

namespace {

int mod3(int i) { return ((i % 3) + 3) % 3; }

struct A2Builder {
    A2S4Data data;
    Poly z;                      // x . y
    std::vector<Poly> lam, c, d; // index mod 3

    A2Builder() {
        data.xy_ring = make_ring({"x1", "x2", "x3", "y1", "y2", "y3"});
        const RingPtr& r = data.xy_ring;
        auto X = [&](int i) { return Poly::variable(r, mod3(i)); };
        auto Y = [&](int i) { return Poly::variable(r, 3 + mod3(i)); };
        std::vector<Poly> b(3);
        for (int i = 0; i < 3; ++i) b[i] = X(i) * Y(i);
        z = b[0] + b[1] + b[2];
        lam.resize(3);
        c.resize(3);
        d.resize(3);
        for (int i = 0; i < 3; ++i) {
            lam[i] = b[mod3(i + 1)] - b[mod3(i - 1)];
            c[i] = X(i + 1) * X(i + 1) * Y(i - 1) * Y(i - 1);
            d[i] = X(i - 1) * X(i - 1) * Y(i + 1) * Y(i + 1);
        }
        auto sum3 = [&](auto f) {
            Poly s(r);
            for (int i = 0; i < 3; ++i) s += f(i);
            return s;
        };
        // f0, f1, f2, g0, g1, g2, h1, h2
        data.gens = {
            sum3([&](int i) { return lam[i] * lam[i]; }),
            sum3([&](int i) { return d[i]; }),
            sum3([&](int i) { return c[i]; }),
            lam[0] * lam[1] * lam[2],
            sum3([&](int i) { return lam[i] * d[i]; }),
            sum3([&](int i) { return lam[i] * c[i]; }),
            sum3([&](int i) { return lam[i] * lam[i] * d[i]; }),
            sum3([&](int i) { return lam[i] * lam[i] * c[i]; }),
        };
        data.degrees = {4, 4, 4, 6, 6, 6, 8, 8};
        data.omega_weight = {0, 1, 2, 0, 1, 2, 1, 2};
        data.gen_ring = make_ring({"f0", "f1", "f2", "g0", "g1", "g2", "h1", "h2"});
    }

    // Remainder of division by z (leading term x3 y3): exact membership
    // test for the principal ideal (z).
    Poly reduce_mod_z(const Poly& p) const {
        const RingPtr& r = data.xy_ring;
        Poly minus = -(Poly::variable(r, 0) * Poly::variable(r, 3) +
                       Poly::variable(r, 1) * Poly::variable(r, 4));
        Poly cur = p;
        for (;;) {
            Poly next(r);
            bool changed = false;
            for (const auto& [m, coeff] : cur.terms()) {
                unsigned e3 = static_cast<unsigned char>(m[2]);
                unsigned f3 = static_cast<unsigned char>(m[5]);
                unsigned k = std::min(e3, f3);
                if (k == 0) {
                    next.add_term(m, coeff);
                    continue;
                }
                changed = true;
                Mono mm(m);
                mm[2] = static_cast<char>(e3 - k);
                mm[5] = static_cast<char>(f3 - k);
                Poly term(r);
                term.add_term(mm, coeff);
                for (unsigned t = 0; t < k; ++t) term = term * minus;
                next += term;
            }
            cur = std::move(next);
            if (!changed) return cur;
        }
    }

    Poly expand(const Poly& gen_poly) const {
        return gen_poly.substituted(data.xy_ring, data.gens);
    }
};

const A2Builder& builder() {
    static A2Builder b = [] {
        A2Builder bb;
        // Relation kernels per (degree, omega) stratum, degrees up to 16.
        struct Stratum {
            int degree, weight;
            std::vector<std::vector<int>> columns;
        };
        std::map<std::pair<int, int>, Stratum> strata;
        std::vector<int> cur(8, 0);
        std::function<void(int, int)> enumerate = [&](int from, int left) {
            if (left == 0) {
                int w = 0, deg = 0;
                for (int g = 0; g < 8; ++g) {
                    w += cur[g] * bb.data.omega_weight[g];
                    deg += cur[g] * bb.data.degrees[g];
                }
                auto& s = strata[{deg, mod3(w)}];
                s.degree = deg;
                s.weight = mod3(w);
                s.columns.push_back(cur);
                return;
            }
            if (from == 8) return;
            for (int e = 0; e * bb.data.degrees[from] <= left; ++e) {
                cur[from] = e;
                enumerate(from + 1, left - e * bb.data.degrees[from]);
            }
            cur[from] = 0;
        };
        for (int deg = 8; deg <= 16; deg += 2) enumerate(0, deg);

        std::map<int, A2S4Data::Block> blocks;
        for (auto& [key, st] : strata) {
            if (st.columns.size() < 2) continue;
            std::sort(st.columns.begin(), st.columns.end());
            // Exact evaluation matrix at rational points of a2.
            const std::size_t ncols = st.columns.size();
            SmallRng rng(0xa254 + 37 * st.degree + st.weight);
            std::size_t npts = ncols + 8;
            RatMatrix m(npts, ncols);
            for (std::size_t t = 0; t < npts; ++t) {
                // point with xate y = 0: x random, y3 solved
                long x1, x2, x3 = 0, y1, y2;
                while (x3 == 0) x3 = rng.range(-5, 5);
                x1 = rng.range(-5, 5);
                x2 = rng.range(-5, 5);
                y1 = rng.range(-5, 5);
                y2 = rng.range(-5, 5);
                Rat y3 = Rat(-(x1 * y1 + x2 * y2), x3);
                RatVec pt{Rat(x1), Rat(x2), Rat(x3), Rat(y1), Rat(y2), y3};
                RatVec gv;
                for (const auto& g : bb.data.gens) gv.push_back(g.eval(pt));
                for (std::size_t ccol = 0; ccol < ncols; ++ccol) {
                    Rat v(1);
                    for (int g = 0; g < 8; ++g)
                        for (int e = 0; e < st.columns[ccol][g]; ++e) v *= gv[g];
                    m.at(t, ccol) = v;
                }
            }
            auto kernel = m.kernel_basis();
            if (kernel.empty()) continue;
            // Exact confirmation of every kernel vector modulo (z).
            for (const auto& v : kernel) {
                Poly cand(bb.data.gen_ring);
                for (std::size_t ccol = 0; ccol < ncols; ++ccol) {
                    if (v[ccol].is_zero()) continue;
                    Mono mono(8, '\0');
                    for (int g = 0; g < 8; ++g) mono[g] = static_cast<char>(st.columns[ccol][g]);
                    cand.add_term(mono, v[ccol]);
                }
                Poly expanded = bb.expand(cand);
                if (!bb.reduce_mod_z(expanded).is_zero())
                    throw std::logic_error("a2s4: evaluation kernel vector failed confirmation");
            }
            auto& blk = blocks[st.degree];
            blk.degree = st.degree;
            for (const auto& col : st.columns) blk.columns.push_back(col);
            // Re-key kernel vectors on the block's growing column list later;
            // store per-stratum for exactness: append with stratum offset.
            std::size_t offset = blk.columns.size() - ncols;
            for (const auto& v : kernel) {
                RatVec row(blk.columns.size());
                for (std::size_t ccol = 0; ccol < ncols; ++ccol) row[offset + ccol] = v[ccol];
                blk.kernel.push_back(std::move(row));
            }
            for (auto& row : blk.kernel) row.resize(blk.columns.size());
        }
        for (auto& [deg, blk] : blocks) {
            // Pad earlier kernel rows to the final column count and normalize.
            for (auto& row : blk.kernel) row.resize(blk.columns.size());
            blk.kernel = rref_normalize(std::move(blk.kernel));
            bb.data.blocks.push_back(std::move(blk));
        }
        return bb;
    }();
    return b;
}

}  // namespace

const A2S4Data& a2s4_data() { return builder().data; }

int A2S4Data::relation_dim() const {
    // New relations modulo lower-degree consequences.
    int total = 0;
    for (const auto& [deg, cnt] : degree_counts()) {
        (void)deg;
        total += cnt;
    }
    return total;
}

std::map<int, int> A2S4Data::degree_counts() const {
    std::map<int, int> out;
    // consequences: relation (lower degree) * generator monomials.
    for (const auto& blk : blocks) {
        std::map<std::vector<int>, std::size_t> colidx;
        for (std::size_t i = 0; i < blk.columns.size(); ++i) colidx[blk.columns[i]] = i;
        std::vector<RatVec> conseq;
        for (const auto& low : blocks) {
            if (low.degree >= blk.degree) continue;
            int need = blk.degree - low.degree;
            // monomials in generators of weighted degree `need`
            std::vector<std::vector<int>> ms;
            std::vector<int> cur(8, 0);
            std::function<void(int, int)> rec = [&](int from, int left) {
                if (left == 0) { ms.push_back(cur); return; }
                if (from == 8) return;
                for (int e = 0; e * degrees[from] <= left; ++e) {
                    cur[from] = e;
                    rec(from + 1, left - e * degrees[from]);
                }
                cur[from] = 0;
            };
            rec(0, need);
            for (const auto& krow : low.kernel)
                for (const auto& mexp : ms) {
                    RatVec row(blk.columns.size());
                    bool ok = true;
                    for (std::size_t i = 0; i < low.columns.size() && ok; ++i) {
                        if (krow[i].is_zero()) continue;
                        std::vector<int> prod = low.columns[i];
                        for (int g = 0; g < 8; ++g) prod[g] += mexp[g];
                        auto it = colidx.find(prod);
                        if (it == colidx.end()) ok = false;
                        else row[it->second] += krow[i];
                    }
                    if (ok) conseq.push_back(std::move(row));
                }
        }
        auto crref = rref_normalize(std::move(conseq));
        std::size_t rank_c = crref.size();
        std::size_t rank_all = rref_normalize([&] {
            std::vector<RatVec> all = crref;
            for (const auto& k : blk.kernel) all.push_back(k);
            return all;
        }()).size();
        int fresh = static_cast<int>(rank_all - rank_c);
        if (fresh > 0) out[blk.degree] = fresh;
    }
    return out;
}

bool A2S4Data::contains(const Poly& candidate) const {
    if (candidate.is_zero()) return true;
    // Split the candidate by weighted degree and test against the kernel.
    std::map<int, Poly> parts;
    for (const auto& [m, coeff] : candidate.terms()) {
        int deg = 0;
        for (int g = 0; g < 8; ++g) deg += static_cast<unsigned char>(m[g]) * degrees[g];
        auto& p = parts.try_emplace(deg, Poly(gen_ring)).first->second;
        p.add_term(m, coeff);
    }
    for (const auto& [deg, part] : parts) {
        const Block* blk = nullptr;
        for (const auto& b : blocks)
            if (b.degree == deg) { blk = &b; break; }
        if (!blk) return false;
        std::map<std::vector<int>, std::size_t> colidx;
        for (std::size_t i = 0; i < blk->columns.size(); ++i) colidx[blk->columns[i]] = i;
        RatVec v(blk->columns.size());
        for (const auto& [m, coeff] : part.terms()) {
            std::vector<int> exp(8);
            for (int g = 0; g < 8; ++g) exp[g] = static_cast<unsigned char>(m[g]);
            auto it = colidx.find(exp);
            if (it == colidx.end()) return false;
            v[it->second] = coeff;
        }
        // reduce against kernel rref
        RatVec r = v;
        for (const auto& row : blk->kernel) {
            std::size_t lead = row.size();
            for (std::size_t i = 0; i < row.size(); ++i)
                if (!row[i].is_zero()) { lead = i; break; }
            if (lead == row.size() || r[lead].is_zero()) continue;
            Rat f = r[lead];
            for (std::size_t i = lead; i < row.size(); ++i) r[i] -= f * row[i];
        }
        for (const auto& x : r)
            if (!x.is_zero()) return false;
    }
    return true;
}

bool A2S4Data::expands_to_zero(const Poly& candidate) const {
    return builder().reduce_mod_z(builder().expand(candidate)).is_zero();
}

std::vector<Poly> A2S4Data::printed_relations(bool corrected_r8) const {
    const RingPtr& r = gen_ring;
    auto V = [&](const char* name) { return Poly::variable(r, r->var_index(name)); };
    Poly f0 = V("f0"), f1 = V("f1"), f2 = V("f2"), g0 = V("g0"), g1 = V("g1"), g2 = V("g2"),
         h1 = V("h1"), h2 = V("h2");
    auto C = [&](long c) { return Poly::constant(r, Rat(c)); };
    std::vector<Poly> rel;
    rel.push_back(C(5) * f0 * f0 * f0 + C(108) * f0 * f1 * f2 - C(216) * f1 * h2 -
                  C(216) * f2 * h1 + C(24) * g0 * g0 - C(216) * g1 * g2);
    rel.push_back(C(8) * f0 * f0 * f1 - C(15) * f0 * h1 - C(18) * f2 * h2 + C(6) * g0 * g1 +
                  C(18) * g2 * g2);
    rel.push_back(C(8) * f0 * f0 * f2 - C(15) * f0 * h2 - C(18) * f1 * h1 + C(6) * g0 * g2 +
                  C(18) * g1 * g1);
    rel.push_back(f0 * f0 * g1 - C(10) * f0 * f1 * g0 + C(18) * f0 * f2 * g2 +
                  C(12) * f2 * f2 * g0 + C(12) * g0 * h1 - C(36) * g2 * h2);
    rel.push_back(f0 * f0 * g0 - C(4) * f1 * f2 * g0 - C(12) * g1 * h2 - C(12) * g2 * h1);
    rel.push_back(f0 * f0 * g2 - C(10) * f0 * f2 * g0 + C(18) * f0 * f1 * g1 +
                  C(12) * f1 * f1 * g0 + C(12) * g0 * h2 - C(36) * g1 * h1);
    rel.push_back(f0 * f0 * f0 * f0 - C(68) * f0 * f0 * f1 * f2 - C(48) * f0 * g1 * g2 +
                  C(144) * f1 * f1 * h1 - C(144) * f1 * g1 * g1 + C(144) * g2 * g2 * h2 -
                  C(144) * f2 * g2 * g2 + C(144) * h1 * h2);
    {
        Poly r8 = C(9) * f0 * f0 * f0 * f1 + C(32) * f0 * f0 * f2 * f2 -
                  C(36) * f0 * f1 * f1 * f2 - C(18) * f0 * f0 * h1 - C(120) * f0 * f2 * h2 +
                  C(24) * f0 * g2 * g2 + C(72) * f1 * g1 * g2 + C(72) * f2 * g1 * g1 +
                  C(72) * h2 * h2;
        r8 += corrected_r8 ? C(72) * f1 * f1 * h2 : C(72) * f1 * f1 * h1;
        rel.push_back(r8);
    }
    rel.push_back(C(9) * f0 * f0 * f0 * f2 + C(32) * f0 * f0 * f1 * f1 -
                  C(36) * f0 * f1 * f2 * f2 - C(18) * f0 * f0 * h2 - C(120) * f0 * f1 * h1 +
                  C(24) * f0 * g1 * g1 + C(72) * f2 * f2 * h1 + C(72) * f2 * g1 * g2 +
                  C(72) * f1 * g2 * g2 + C(72) * h1 * h1);
    return rel;
}

std::optional<std::vector<Poly>> a2s4_paper_identification() {
    const auto& D = a2s4_data();
    const RingPtr& r = D.gen_ring;
    // Candidate identifications: optionally swap the omega and omega^2 sides
    // (f1 <-> f2, g1 <-> g2, h1 <-> h2) and use sum lam^3 = 3 g0 instead of g0.
    for (int swap = 0; swap < 2; ++swap)
        for (int g0alt = 0; g0alt < 2; ++g0alt) {
            std::vector<Poly> images;
            auto var = [&](const char* n) { return Poly::variable(r, r->var_index(n)); };
            images.push_back(var("f0"));
            images.push_back(swap ? var("f2") : var("f1"));
            images.push_back(swap ? var("f1") : var("f2"));
            images.push_back(g0alt ? var("g0").scaled(Rat(3)) : var("g0"));
            images.push_back(swap ? var("g2") : var("g1"));
            images.push_back(swap ? var("g1") : var("g2"));
            images.push_back(swap ? var("h2") : var("h1"));
            images.push_back(swap ? var("h1") : var("h2"));
            auto printed = D.printed_relations(true);
            bool all = true;
            for (const auto& p : printed) {
                Poly sub = p.substituted(r, images);
                if (!D.expands_to_zero(sub)) { all = false; break; }
            }
            if (all) return images;
        }
    return std::nullopt;
}

std::vector<Poly> a2s4_values_at_nst() {
    const auto& D = a2s4_data();
    auto st = make_ring({"s", "t"});
    Poly s = Poly::variable(st, 0), t = Poly::variable(st, 1);
    // N_{s,t} = x y^T with x = (s, -t, 0), y = (t, s, 0).
    std::vector<Poly> pt{s, -t, Poly(st), t, s, Poly(st)};
    std::vector<Poly> out;
    for (const auto& g : D.gens) out.push_back(g.substituted(st, pt));
    return out;
}

}  // namespace slicecert
