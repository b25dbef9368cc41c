#include "slicecert/classicalcase.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace slicecert {

namespace {

RatMatrix invert(const RatMatrix& m) {
    const int n = static_cast<int>(m.rows());
    RatMatrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        RatVec rhs(n);
        rhs[c] = Rat(1);
        auto x = m.solve(rhs);
        if (!x) throw std::invalid_argument("invert: singular matrix");
        for (int i = 0; i < n; ++i) inv.at(i, c) = (*x)[i];
    }
    return inv;
}

}  // namespace

bool FormAlgebra::contains(const RatMatrix& x) const {
    RatMatrix t = x.transpose() * form + form * x;
    return t.is_zero();
}

RatMatrix FormAlgebra::sample(SmallRng& rng) const {
    RatMatrix x(n(), n());
    for (const auto& b : basis) {
        long c = rng.range(-4, 4);
        if (c == 0) continue;
        x = x + b.scaled(Rat(c));
    }
    return x;
}

RatMatrix FormAlgebra::sample_group(SmallRng& rng) const {
    for (int attempt = 0; attempt < 16; ++attempt) {
        RatMatrix a = sample(rng);
        // (I + A) must be invertible; retry otherwise.
        RatMatrix ipa = RatMatrix::identity(n()) + a;
        if (ipa.rank() < static_cast<std::size_t>(n())) continue;
        RatMatrix ima = RatMatrix::identity(n()) - a;
        return ima * invert(ipa);
    }
    throw std::runtime_error("sample_group: could not invert I + A");
}

std::size_t FormAlgebra::orbit_dim(const RatMatrix& x) const {
    // rank of ad(x) restricted to the algebra.
    const int nn = n();
    std::vector<IntVec> rows(nn * nn, IntVec(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        RatMatrix br = x * basis[k] - basis[k] * x;
        Int l(1);
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j)
                if (!br.at(i, j).is_zero())
                    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), br.at(i, j).den().get_mpz_t());
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j)
                if (!br.at(i, j).is_zero())
                    rows[i * nn + j][k] = br.at(i, j).num() * (l / br.at(i, j).den());
    }
    return rank_int_rows(rows, basis.size());
}

FormAlgebra make_algebra(char type, const RatMatrix& form) {
    FormAlgebra g;
    g.type = type;
    g.form = form;
    const int n = static_cast<int>(form.rows());
    // X in g  <=>  form * X is antisymmetric (so) / symmetric (sp),
    // i.e. X = form^{-1} * S with S anti/symmetric as appropriate.
    RatMatrix binv = invert(form);
    bool want_sym = (type == 'C');
    for (int i = 0; i < n; ++i)
        for (int j = (want_sym ? i : i + 1); j < n; ++j) {
            RatMatrix s(n, n);
            s.at(i, j) = Rat(1);
            if (i != j) s.at(j, i) = want_sym ? Rat(1) : Rat(-1);
            g.basis.push_back(binv * s);
        }
    for (const auto& b : g.basis)
        if (!g.contains(b)) throw std::logic_error("make_algebra: bad basis element");
    return g;
}

FormAlgebra make_so_split(int n) {
    RatMatrix b(n, n);
    for (int i = 0; i < n; ++i) b.at(i, n - 1 - i) = Rat(1);
    return make_algebra('B', b);
}

FormAlgebra make_sp_split(int n) {
    if (n % 2) throw std::invalid_argument("make_sp_split: n must be even");
    RatMatrix b(n, n);
    for (int i = 0; i < n / 2; ++i) {
        b.at(i, n - 1 - i) = Rat(1);
        b.at(n - 1 - i, i) = Rat(-1);
    }
    return make_algebra('C', b);
}

namespace {

// One sl2-string of dimension d: E w_j = w_{j-1}, H w_j = (d-1-2j) w_j,
// F w_j = (j+1)(d-1-j) w_{j+1}.
struct Block {
    int part = 0;       // d
    int offset = 0;     // first index in the ambient space
    bool dual = false;  // second member of a hyperbolic pair
    int mate = -1;      // pair partner block id
};

}  // namespace

MatrixTriple partition_triple(char type, const std::vector<int>& parts_in) {
    std::vector<int> parts = parts_in;
    std::sort(parts.rbegin(), parts.rend());
    int total = 0;
    for (int p : parts) total += p;

    std::map<int, int> mult;
    for (int p : parts) mult[p]++;
    auto single_ok = [&](int d) {
        return (type == 'B') ? (d % 2 == 1) : (d % 2 == 0);
    };
    for (const auto& [d, m] : mult)
        if (!single_ok(d) && (m % 2))
            throw std::invalid_argument("partition_triple: invalid partition for the type");

    // Lay out blocks: singles for parity-matching parts, hyperbolic pairs
    // otherwise (and pair up parity-matching parts of even multiplicity too
    // when it keeps multiplicities aligned: we simply pair the non-matching
    // ones, singles elsewhere).
    std::vector<Block> blocks;
    int off = 0;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        int d = it->first, m = it->second;
        if (single_ok(d)) {
            for (int i = 0; i < m; ++i) {
                blocks.push_back({d, off, false, -1});
                off += d;
            }
        } else {
            for (int i = 0; i < m / 2; ++i) {
                int a = static_cast<int>(blocks.size());
                blocks.push_back({d, off, false, a + 1});
                off += d;
                blocks.push_back({d, off, true, a});
                off += d;
            }
        }
    }

    RatMatrix e(total, total), h(total, total), f(total, total), form(total, total);
    for (const auto& b : blocks) {
        int d = b.part;
        for (int j = 0; j < d; ++j) {
            int idx = b.offset + j;
            // The dual block carries the dual action, so weights flip.
            h.at(idx, idx) = Rat(b.dual ? -(d - 1 - 2 * j) : d - 1 - 2 * j);
        }
        if (!b.dual) {
            for (int j = 1; j < d; ++j) e.at(b.offset + j - 1, b.offset + j) = Rat(1);
            for (int j = 0; j + 1 < d; ++j)
                f.at(b.offset + j + 1, b.offset + j) = Rat(static_cast<long>(j + 1) * (d - 1 - j));
        } else {
            // Dual action: -E^T, -F^T on the mate's pattern.
            for (int j = 1; j < d; ++j) e.at(b.offset + j, b.offset + j - 1) = Rat(-1);
            for (int j = 0; j + 1 < d; ++j)
                f.at(b.offset + j, b.offset + j + 1) = Rat(-static_cast<long>(j + 1) * (d - 1 - j));
        }
    }
    // Forms: single block d: <w_j, w_{d-1-j}> = (-1)^j; hyperbolic pair:
    // <v, phi> = phi(v), extended so the total form is symmetric (so) or
    // antisymmetric (sp).
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& b = blocks[bi];
        int d = b.part;
        if (b.mate < 0) {
            for (int j = 0; j < d; ++j) {
                Rat c = (j % 2) ? Rat(-1) : Rat(1);
                form.at(b.offset + j, b.offset + d - 1 - j) = c;
            }
        } else if (!b.dual) {
            const auto& mate = blocks[b.mate];
            for (int j = 0; j < d; ++j) {
                form.at(b.offset + j, mate.offset + j) = Rat(1);
                form.at(mate.offset + j, b.offset + j) = (type == 'B') ? Rat(1) : Rat(-1);
            }
        }
    }

    MatrixTriple t{e, h, f, form, type};
    // Validate: form parity, algebra membership, sl2 identities.
    RatMatrix ft = form.transpose();
    if (type == 'B' && !(ft == form)) throw std::logic_error("partition_triple: form not symmetric");
    if (type == 'C' && !(ft == form.scaled(Rat(-1))))
        throw std::logic_error("partition_triple: form not antisymmetric");
    auto in_algebra = [&](const RatMatrix& x) {
        return (x.transpose() * form + form * x).is_zero();
    };
    if (!in_algebra(e) || !in_algebra(h) || !in_algebra(f))
        throw std::logic_error("partition_triple: triple not in the algebra");
    if (!((h * e - e * h) == e.scaled(Rat(2))) || !((h * f - f * h) == f.scaled(Rat(-2))) ||
        !((e * f - f * e) == h))
        throw std::logic_error("partition_triple: sl2 identities failed");
    if (!(jordan_partition(e) == Partition{parts}))
        throw std::logic_error("partition_triple: wrong Jordan type");
    return t;
}

Partition matrix_partition(const RatMatrix& m) { return jordan_partition(m); }

namespace {

bool valid_partition(char type, const std::vector<int>& p) {
    std::map<int, int> mult;
    for (int x : p) mult[x]++;
    for (const auto& [d, m] : mult) {
        bool needs_even = (type == 'B') ? (d % 2 == 0) : (d % 2 == 1);
        if (needs_even && (m % 2)) return false;
    }
    return true;
}

std::vector<int> transpose_partition(const std::vector<int>& p) {
    std::vector<int> out;
    for (int row = 1;; ++row) {
        int c = 0;
        for (int x : p)
            if (x >= row) ++c;
        if (c == 0) break;
        out.push_back(c);
    }
    return out;
}

bool is_special(char type, const std::vector<int>& p) {
    return valid_partition(type, transpose_partition(p));
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    // a >= b in dominance order (same total).
    int sa = 0, sb = 0;
    std::size_t k = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

void all_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        all_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<int> special_piece_partner(char type, const std::vector<int>& nu) {
    if (!valid_partition(type, nu))
        throw std::invalid_argument("special_piece_partner: invalid partition");
    if (is_special(type, nu)) return {};  // nu is its own special orbit
    int total = 0;
    for (int p : nu) total += p;
    std::vector<std::vector<int>> cands;
    std::vector<int> cur;
    all_partitions(total, total, cur, cands);
    std::vector<std::vector<int>> special;
    for (const auto& p : cands)
        if (valid_partition(type, p) && is_special(type, p) && dominates(p, nu))
            special.push_back(p);
    // Dominance-minimal special partition above nu; the special piece has a
    // unique minimal special orbit over it.
    std::vector<const std::vector<int>*> minimal;
    for (const auto& p : special) {
        bool is_min = true;
        for (const auto& q : special)
            if (q != p && dominates(p, q)) { is_min = false; break; }
        if (is_min) minimal.push_back(&p);
    }
    if (minimal.size() != 1)
        throw std::logic_error("special_piece_partner: minimal special partner not unique");
    return *minimal[0];
}

ClassicalCaseResult classical_main_theorem_check(char type, const std::vector<int>& nu_in) {
    ClassicalCaseResult res;
    std::vector<int> nu = nu_in;
    std::sort(nu.rbegin(), nu.rend());
    res.nu = nu;
    res.lambda = special_piece_partner(type, nu);
    if (res.lambda.empty()) {
        // Degenerate: the piece is a single orbit; trivial certificate.
        res.lambda = nu;
        res.observed = Partition{nu};
        res.matches = true;
        res.height2 = true;
        return res;
    }

    auto t = partition_triple(type, nu);
    FormAlgebra g = make_algebra(type, t.form);
    const int n = g.n();

    // Replaced parts: multiplicities that differ between nu and lambda.
    std::map<int, int> mnu, mlam;
    for (int p : nu) mnu[p]++;
    for (int p : res.lambda) mlam[p]++;
    std::vector<std::pair<int, int>> replaced;  // (part, multiplicity in nu)
    for (const auto& [s, m] : mnu)
        if (mlam[s] == m - 2 && mlam[s + 1] > mnu[s + 1]) replaced.emplace_back(s, m);

    // e0 = sum over replaced parts of a minimal nilpotent of the symplectic
    // factor acting on that part's multiplicity space.  Each such factor
    // contains the 2-dimensional stripe of centralizer elements supported on
    // one hyperbolic pair of blocks of that part size.
    RatMatrix e0(n, n);
    // Recover block layout the same way partition_triple does.
    struct Range { int part, offset; bool dual; int mate_off; };
    std::vector<Range> ranges;
    {
        std::map<int, int, std::greater<int>> mult;
        for (int p : nu) mult[p]++;
        auto single_ok = [&](int d) { return (type == 'B') ? (d % 2 == 1) : (d % 2 == 0); };
        int off = 0;
        for (const auto& [d, m] : mult) {
            if (single_ok(d)) {
                for (int i = 0; i < m; ++i) { ranges.push_back({d, off, false, -1}); off += d; }
            } else {
                for (int i = 0; i < m / 2; ++i) {
                    ranges.push_back({d, off, false, off + d});
                    ranges.push_back({d, off + d, true, off});
                    off += 2 * d;
                }
            }
        }
    }
    for (const auto& [s, m] : replaced) {
        (void)m;
        // First hyperbolic pair of blocks with this part size.
        int off1 = -1, off2 = -1;
        for (const auto& r : ranges)
            if (r.part == s && !r.dual && r.mate_off >= 0) { off1 = r.offset; off2 = r.mate_off; break; }
        if (off1 < 0)
            throw std::logic_error("classical_main_theorem_check: replaced part has no pair");
        // Solve for the stripe: X supported on the (off1, off2) off-diagonal
        // strip, in g, commuting with e and h.
        std::vector<std::pair<int, int>> support;
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k) {
                support.emplace_back(off1 + j, off2 + k);
                support.emplace_back(off2 + j, off1 + k);
            }
        RatMatrix sys(3 * n * n, support.size());
        for (std::size_t c = 0; c < support.size(); ++c) {
            RatMatrix x(n, n);
            x.at(support[c].first, support[c].second) = Rat(1);
            RatMatrix ge = x * t.e - t.e * x;
            RatMatrix gh = x * t.h - t.h * x;
            RatMatrix alg = x.transpose() * t.form + t.form * x;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    sys.at(i * n + j, c) = ge.at(i, j);
                    sys.at(n * n + i * n + j, c) = gh.at(i, j);
                    sys.at(2 * n * n + i * n + j, c) = alg.at(i, j);
                }
        }
        auto ker = sys.kernel_basis();
        if (ker.empty()) throw std::logic_error("classical_main_theorem_check: empty stripe");
        RatMatrix xi(n, n);
        for (std::size_t c = 0; c < support.size(); ++c)
            xi.at(support[c].first, support[c].second) = ker[0][c];
        e0 = e0 + xi;
        res.factor_ks.push_back(m / 2);
    }

    RatMatrix x = t.f + e0;
    res.observed = jordan_partition(x);
    res.matches = (res.observed == Partition{res.lambda});

    // e0 has height 2: (ad e0)^3 kills every basis element of the algebra.
    bool ok = true;
    for (const auto& b : g.basis) {
        RatMatrix c1 = e0 * b - b * e0;
        RatMatrix c2 = e0 * c1 - c1 * e0;
        RatMatrix c3 = e0 * c2 - c2 * e0;
        if (!c3.is_zero()) { ok = false; break; }
    }
    res.height2 = ok;

    // Codimension of the nu-orbit in the lambda-closure.
    auto tl = partition_triple(type, res.lambda);
    FormAlgebra gl = make_algebra(type, tl.form);
    res.codim = gl.orbit_dim(tl.e) - g.orbit_dim(t.e);
    return res;
}

}  // namespace slicecert
