#include "slicecert/chevalley.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slicecert {

std::string convention_hash_for(const RootSystem& rs) {
    std::string desc = "chevalley|extraspecial:+1|order:height-lex|basis:f-rev,h,e|type:";
    desc += rs.name();
    return hex64(fnv1a(desc));
}

std::string LieAlgebraData::basis_name(int idx) const {
    auto root_str = [&](int pos_idx) {
        std::string s = "[";
        const auto& v = rs.positives[pos_idx];
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    if (idx < npos()) return "f" + root_str(npos() - 1 - idx);
    if (idx < npos() + rs.rank) return "h" + std::to_string(idx - npos() + 1);
    return "e" + root_str(idx - npos() - rs.rank);
}

int LieAlgebraData::n_const(int a, int b) const {
    auto it = n_.find({a, b});
    return it == n_.end() ? 0 : it->second;
}

namespace {

// N_{a, -b} for distinct positive roots a, b (0 when a - b is not a root).
// Reduced to positive-pair constants via the standard three-root identity.
Rat mixed_n(const RootSystem& rs, const std::map<std::pair<int, int>, int>& n, int a, int b) {
    const RootVec& ra = rs.positives[a];
    const RootVec& rb = rs.positives[b];
    RootVec delta(rs.rank);
    for (int i = 0; i < rs.rank; ++i) delta[i] = ra[i] - rb[i];
    auto lu = rs.lookup(delta);
    if (!lu.found) return Rat(0);
    if (lu.positive) {
        // N_{a,-b} = -(|d|^2/|a|^2) N_{b,d}, with b + d = a.
        auto it = n.find({b, lu.index});
        if (it == n.end()) throw std::logic_error("mixed_n: missing positive pair");
        return Rat(-it->second) * Rat(rs.norm2(delta), rs.norm2(ra));
    }
    // tau = b - a positive: N_{a,-b} = (|tau|^2/|b|^2) N_{tau,a}, tau + a = b.
    auto it = n.find({lu.index, a});
    if (it == n.end()) throw std::logic_error("mixed_n: missing positive pair (neg)");
    const RootVec& tau = rs.positives[lu.index];
    return Rat(it->second) * Rat(rs.norm2(tau), rs.norm2(rb));
}

}  // namespace

void LieAlgebraData::build_tables() {
    const int np = npos();
    const int r = rs.rank;
    const int d = dim();

    // Structure constants for positive special pairs, by height of the sum.
    n_.clear();
    for (int g = 0; g < np; ++g) {
        const RootVec& gamma = rs.positives[g];
        if (RootSystem::height(gamma) < 2) continue;
        // Decompositions gamma = a + b with a <= b in the root order.
        std::vector<std::pair<int, int>> decomp;
        for (int a = 0; a < np; ++a) {
            RootVec rest(r);
            for (int i = 0; i < r; ++i) rest[i] = gamma[i] - rs.positives[a][i];
            auto lu = rs.lookup(rest);
            if (lu.found && lu.positive && a <= lu.index) decomp.emplace_back(a, lu.index);
        }
        if (decomp.empty()) throw std::logic_error("positive non-simple root with no decomposition");
        // decomp is sorted by a; the first entry is the extraspecial pair.
        auto [xi, eta] = decomp.front();
        int p = rs.string_down(rs.positives[xi], rs.positives[eta]);
        n_[{xi, eta}] = p + 1;
        n_[{eta, xi}] = -(p + 1);
        for (std::size_t k = 1; k < decomp.size(); ++k) {
            auto [a, b] = decomp[k];
            // Four-root identity on (xi, eta, -a, -b).
            RootVec ea(r), xa(r);
            for (int i = 0; i < r; ++i) {
                ea[i] = rs.positives[eta][i] - rs.positives[a][i];
                xa[i] = rs.positives[xi][i] - rs.positives[a][i];
            }
            Rat term2(0), term3(0);
            if (rs.is_root(ea))
                term2 = mixed_n(rs, n_, eta, a) * mixed_n(rs, n_, xi, b) / Rat(rs.norm2(ea));
            if (rs.is_root(xa))
                term3 = -mixed_n(rs, n_, xi, a) * mixed_n(rs, n_, eta, b) / Rat(rs.norm2(xa));
            Rat nval = (term2 + term3) * Rat(rs.norm2(gamma)) / Rat(n_[{xi, eta}]);
            if (!nval.is_integer() || nval.is_zero())
                throw std::logic_error("structure constant recursion failed");
            int expect = rs.string_down(rs.positives[a], rs.positives[b]) + 1;
            long got = nval.num().get_si();
            if (std::abs(got) != expect)
                throw std::logic_error("structure constant magnitude != p+1");
            n_[{a, b}] = static_cast<int>(got);
            n_[{b, a}] = -static_cast<int>(got);
        }
    }

    // Full bracket table.
    table_.assign(static_cast<std::size_t>(d) * d, {});
    auto put = [&](int i, int j, SparseVec v) {
        SparseVec neg;
        neg.reserve(v.size());
        for (auto& [idx, c] : v) neg.emplace_back(idx, -c);
        table_[static_cast<std::size_t>(i) * d + j] = std::move(v);
        table_[static_cast<std::size_t>(j) * d + i] = std::move(neg);
    };
    auto sum_index = [&](int a, int b, bool& pos) -> int {
        RootVec s(r);
        for (int i = 0; i < r; ++i) s[i] = rs.positives[a][i] + rs.positives[b][i];
        auto lu = rs.lookup(s);
        if (!lu.found) return -1;
        pos = lu.positive;
        return lu.index;
    };

    // [h_i, h_j] = 0 already.  [h_i, e_a] and [h_i, f_a]:
    for (int i = 0; i < r; ++i)
        for (int a = 0; a < np; ++a) {
            int c = rs.pair_coroot(rs.positives[a], i);
            if (c) {
                put(h_index(i), e_index(a), {{e_index(a), c}});
                put(h_index(i), f_index(a), {{f_index(a), -c}});
            }
        }
    // [e_a, e_b] and [f_a, f_b]:
    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b) {
            bool pos = false;
            int s = sum_index(a, b, pos);
            if (s < 0) continue;
            int nab = n_const(a, b);
            put(e_index(a), e_index(b), {{e_index(s), nab}});
            put(f_index(a), f_index(b), {{f_index(s), -nab}});
        }
    // [e_a, f_b]:
    for (int a = 0; a < np; ++a) {
        // a == b: the coroot.
        SparseVec h;
        auto cc = rs.coroot_coords(rs.positives[a]);
        for (int i = 0; i < r; ++i)
            if (cc[i]) h.emplace_back(h_index(i), cc[i]);
        put(e_index(a), f_index(a), std::move(h));
        for (int b = 0; b < np; ++b) {
            if (b == a) continue;
            Rat c = mixed_n(rs, n_, a, b);
            if (c.is_zero()) continue;
            if (!c.is_integer()) throw std::logic_error("mixed structure constant not integral");
            RootVec dlt(r);
            for (int i = 0; i < r; ++i) dlt[i] = rs.positives[a][i] - rs.positives[b][i];
            auto lu = rs.lookup(dlt);
            int idx = lu.positive ? e_index(lu.index) : f_index(lu.index);
            table_[static_cast<std::size_t>(e_index(a)) * d + f_index(b)] = {
                {idx, static_cast<int>(c.num().get_si())}};
            table_[static_cast<std::size_t>(f_index(b)) * d + e_index(a)] = {
                {idx, -static_cast<int>(c.num().get_si())}};
        }
    }
}

LieAlgebraData build_chevalley(const RootSystem& rs) {
    LieAlgebraData L;
    L.rs = rs;
    L.convention_hash = convention_hash_for(rs);
    L.build_tables();
    return L;
}

LieAlgebraData build_chevalley(char type_letter, int rank) {
    return build_chevalley(build_root_system(type_letter, rank));
}

LieVec LieAlgebraData::bracket(const LieVec& x, const LieVec& y) const {
    const int d = dim();
    LieVec out(d);
    std::vector<int> xs, ys;
    for (int i = 0; i < d; ++i)
        if (!x[i].is_zero()) xs.push_back(i);
    for (int j = 0; j < d; ++j)
        if (!y[j].is_zero()) ys.push_back(j);
    for (int i : xs)
        for (int j : ys) {
            const auto& t = table(i, j);
            if (t.empty()) continue;
            Rat c = x[i] * y[j];
            for (const auto& [k, v] : t) out[k] += c * Rat(v);
        }
    return out;
}

RatMatrix LieAlgebraData::ad_matrix(const LieVec& x) const {
    const int d = dim();
    RatMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            for (const auto& [k, v] : table(i, j)) m.at(k, j) += x[i] * Rat(v);
        }
    }
    return m;
}

SparseIntMat LieAlgebraData::ad_sparse_scaled(const LieVec& x, Rat* scale) const {
    const int d = dim();
    Int l(1);
    for (const auto& c : x)
        if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    if (scale) *scale = Rat(Int(1), l);
    std::vector<std::pair<int, Int>> xi;
    for (int i = 0; i < d; ++i)
        if (!x[i].is_zero()) xi.emplace_back(i, x[i].num() * (l / x[i].den()));
    SparseIntMat m(d, d);
    IntVec colbuf(d);
    for (int j = 0; j < d; ++j) {
        bool any = false;
        for (const auto& [i, c] : xi) {
            for (const auto& [k, v] : table(i, j)) {
                colbuf[k] += c * v;
                any = true;
            }
        }
        if (!any) continue;
        for (int k = 0; k < d; ++k) {
            if (sgn(colbuf[k]) != 0) {
                m.col[j].emplace_back(k, colbuf[k]);
                colbuf[k] = 0;
            }
        }
    }
    return m;
}

Rat LieAlgebraData::killing(const LieVec& x, const LieVec& y) const {
    // tr(ad x ad y) over the basis, exploiting table sparsity.
    const int d = dim();
    Rat t;
    for (int k = 0; k < d; ++k) {
        // [y, b_k], then coefficient of b_k in [x, [y, b_k]].
        for (int j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            for (const auto& [m, v] : table(j, k)) {
                if (v == 0) continue;
                for (int i = 0; i < d; ++i) {
                    if (x[i].is_zero()) continue;
                    for (const auto& [w, u] : table(i, m))
                        if (w == k) t += x[i] * y[j] * Rat(static_cast<long>(v) * u);
                }
            }
        }
    }
    return t;
}

RatMatrix LieAlgebraData::killing_gram() const {
    const int d = dim();
    const int np = npos();
    RatMatrix g(d, d);
    auto basis_pair = [&](int i, int j) {
        LieVec x = zero(), y = zero();
        x[i] = Rat(1);
        y[j] = Rat(1);
        return killing(x, y);
    };
    // Nonzero blocks: kappa(e_a, f_a) and the Cartan block.
    for (int a = 0; a < np; ++a) {
        Rat v = basis_pair(e_index(a), f_index(a));
        g.at(e_index(a), f_index(a)) = v;
        g.at(f_index(a), e_index(a)) = v;
    }
    for (int i = 0; i < rs.rank; ++i)
        for (int j = i; j < rs.rank; ++j) {
            Rat v;
            for (int a = 0; a < np; ++a)
                v += Rat(2L * rs.pair_coroot(rs.positives[a], i) * rs.pair_coroot(rs.positives[a], j));
            g.at(h_index(i), h_index(j)) = v;
            g.at(h_index(j), h_index(i)) = v;
        }
    return g;
}

LieVec LieAlgebraData::basis_vector(int idx) const {
    LieVec v = zero();
    v[idx] = Rat(1);
    return v;
}

LieVec LieAlgebraData::e_alpha(const RootVec& root) const {
    auto lu = rs.lookup(root);
    if (!lu.found) throw std::invalid_argument("e_alpha: not a root");
    return basis_vector(lu.positive ? e_index(lu.index) : f_index(lu.index));
}

LieVec LieAlgebraData::coroot(const RootVec& root) const {
    auto cc = rs.coroot_coords(root);
    LieVec v = zero();
    for (int i = 0; i < rs.rank; ++i) v[h_index(i)] = Rat(cc[i]);
    return v;
}

LieVec LieAlgebraData::cartan_from_coroot_coords(const RatVec& c) const {
    LieVec v = zero();
    for (int i = 0; i < rs.rank; ++i) v[h_index(i)] = c[i];
    return v;
}

Rat LieAlgebraData::root_eval_on_cartan(const RootVec& alpha, const LieVec& h) const {
    Rat v;
    for (int i = 0; i < rs.rank; ++i) {
        const Rat& c = h[h_index(i)];
        if (!c.is_zero()) v += c * Rat(rs.pair_coroot(alpha, i));
    }
    return v;
}

LieVec LieAlgebraData::apply_sign_character(const LieVec& x, const std::vector<int>& eps) const {
    LieVec y = x;
    for (int a = 0; a < npos(); ++a) {
        int s = 1;
        const RootVec& root = rs.positives[a];
        for (int i = 0; i < rs.rank; ++i)
            if (eps[i] < 0 && (root[i] & 1)) s = -s;
        if (s < 0) {
            y[e_index(a)] = -y[e_index(a)];
            y[f_index(a)] = -y[f_index(a)];
        }
    }
    return y;
}

void save_chevalley_cache(const LieAlgebraData& L, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    out << "# slicecert structure-constant cache v1\n";
    out << "type " << L.rs.type_letter << "\n";
    out << "rank " << L.rs.rank << "\n";
    out << "basis f-rev,h,e\n";
    out << "convention " << L.convention_hash << "\n";
    out << "dim " << L.dim() << "\n";
    const int d = L.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const auto& t = L.table(i, j);
            if (t.empty()) continue;
            out << i << " " << j << " ->";
            for (const auto& [k, v] : t) out << " " << v << ":" << k;
            out << "\n";
        }
}

std::optional<LieAlgebraData> load_chevalley_cache(const std::string& path,
                                                   const std::string& expect_hash) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "# slicecert structure-constant cache v1")
        return std::nullopt;
    char type = 0;
    int rank = 0, dim = 0;
    std::string convention, basis;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "type") ls >> type;
        else if (key == "rank") ls >> rank;
        else if (key == "basis") ls >> basis;
        else if (key == "convention") ls >> convention;
        else if (key == "dim") { ls >> dim; break; }
        else return std::nullopt;
    }
    if (!type || rank <= 0 || basis != "f-rev,h,e") return std::nullopt;
    if (!expect_hash.empty() && convention != expect_hash) return std::nullopt;

    LieAlgebraData L;
    L.rs = build_root_system(type, rank);
    L.convention_hash = convention_hash_for(L.rs);
    if (L.convention_hash != convention) return std::nullopt;
    if (L.dim() != dim) return std::nullopt;
    const int d = dim;
    L.table_.assign(static_cast<std::size_t>(d) * d, {});
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int i, j;
        std::string arrow;
        if (!(ls >> i >> j >> arrow) || arrow != "->") return std::nullopt;
        LieAlgebraData::SparseVec v, neg;
        std::string tok;
        while (ls >> tok) {
            auto colon = tok.find(':');
            if (colon == std::string::npos) return std::nullopt;
            int c = std::stoi(tok.substr(0, colon));
            int k = std::stoi(tok.substr(colon + 1));
            v.emplace_back(k, c);
            neg.emplace_back(k, -c);
        }
        L.table_[static_cast<std::size_t>(i) * d + j] = std::move(v);
        L.table_[static_cast<std::size_t>(j) * d + i] = std::move(neg);
    }
    // Recover the positive-pair N table from the bracket table.
    const int np = L.npos();
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b) {
            if (a == b) continue;
            RootVec s(L.rs.rank);
            for (int i = 0; i < L.rs.rank; ++i)
                s[i] = L.rs.positives[a][i] + L.rs.positives[b][i];
            auto lu = L.rs.lookup(s);
            if (!lu.found || !lu.positive) continue;
            const auto& t = L.table(L.e_index(a), L.e_index(b));
            if (t.size() != 1) return std::nullopt;
            L.n_[{a, b}] = t[0].second;
        }
    return L;
}

bool is_homomorphism(const LieAlgebraData& src, const LieAlgebraData& tgt, const LieMap& phi) {
    const int ds = src.dim();
    std::vector<LieVec> img(ds);
    for (int i = 0; i < ds; ++i) {
        img[i] = LieVec(tgt.dim());
        for (int k = 0; k < tgt.dim(); ++k) img[i][k] = phi.matrix.at(k, i);
    }
    for (int i = 0; i < ds; ++i)
        for (int j = i + 1; j < ds; ++j) {
            LieVec lhs = tgt.bracket(img[i], img[j]);
            LieVec rhs(tgt.dim());
            for (const auto& [k, v] : src.table(i, j))
                for (int t = 0; t < tgt.dim(); ++t) rhs[t] += Rat(v) * img[k][t];
            if (lhs != rhs) return false;
        }
    return true;
}

LieMap extend_hom(const LieAlgebraData& src, const LieAlgebraData& tgt,
                  const std::vector<LieVec>& e_images, const std::vector<LieVec>& f_images) {
    const int np = src.npos();
    const int r = src.rs.rank;
    std::vector<LieVec> e_img(np), f_img(np);
    // Simple roots are the first `rank` in the root order.
    for (int i = 0; i < r; ++i) {
        const RootVec& alpha = src.rs.positives[i];
        int hgt = RootSystem::height(alpha);
        if (hgt != 1) throw std::logic_error("extend_hom: root order broken");
        int simple = -1;
        for (int k = 0; k < r; ++k)
            if (alpha[k] == 1) simple = k;
        e_img[i] = e_images[simple];
        f_img[i] = f_images[simple];
    }
    for (int g = r; g < np; ++g) {
        // Extraspecial pair: minimal a with gamma - a a positive root.
        const RootVec& gamma = src.rs.positives[g];
        int xi = -1, eta = -1;
        for (int a = 0; a < np; ++a) {
            RootVec rest(src.rs.rank);
            for (int i = 0; i < src.rs.rank; ++i) rest[i] = gamma[i] - src.rs.positives[a][i];
            auto lu = src.rs.lookup(rest);
            if (lu.found && lu.positive) { xi = a; eta = lu.index; break; }
        }
        if (xi < 0) throw std::logic_error("extend_hom: no extraspecial pair");
        int nval = src.n_const(xi, eta);
        Rat inv = Rat(1, nval);
        LieVec be = tgt.bracket(e_img[xi], e_img[eta]);
        LieVec bf = tgt.bracket(f_img[xi], f_img[eta]);
        for (auto& c : be) c *= inv;
        for (auto& c : bf) c *= -inv;
        e_img[g] = std::move(be);
        f_img[g] = std::move(bf);
    }
    LieMap phi;
    phi.matrix = RatMatrix(tgt.dim(), src.dim());
    for (int a = 0; a < np; ++a) {
        for (int k = 0; k < tgt.dim(); ++k) {
            phi.matrix.at(k, src.e_index(a)) = e_img[a][k];
            phi.matrix.at(k, src.f_index(a)) = f_img[a][k];
        }
    }
    for (int i = 0; i < r; ++i) {
        // h_i = [e_i, f_i] for the i-th simple root (root-order index i).
        LieVec h = tgt.bracket(e_img[i], f_img[i]);
        int simple = -1;
        for (int k = 0; k < r; ++k)
            if (src.rs.positives[i][k] == 1) simple = k;
        for (int k = 0; k < tgt.dim(); ++k) phi.matrix.at(k, src.h_index(simple)) = h[k];
    }
    return phi;
}

LieMap diagram_automorphism(const LieAlgebraData& L, const std::vector<int>& node_perm,
                            const std::vector<Rat>& twist) {
    const int r = L.rs.rank;
    // Permutation must preserve the Cartan matrix.
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (L.rs.cartan[i][j] != L.rs.cartan[node_perm[i]][node_perm[j]])
                throw std::invalid_argument("diagram_automorphism: not a diagram symmetry");
    std::vector<LieVec> e_img(r), f_img(r);
    for (int i = 0; i < r; ++i) {
        if (twist[i].is_zero()) throw std::invalid_argument("diagram_automorphism: zero twist");
        RootVec a(r, 0);
        a[node_perm[i]] = 1;
        e_img[i] = L.e_alpha(a);
        for (auto& c : e_img[i]) c *= twist[i];
        RootVec na(r, 0);
        na[node_perm[i]] = -1;
        f_img[i] = L.e_alpha(na);
        for (auto& c : f_img[i]) c *= twist[i].inv();
    }
    LieMap phi = extend_hom(L, L, e_img, f_img);
    if (!is_homomorphism(L, L, phi))
        throw std::logic_error("diagram_automorphism: bracket preservation failed");
    return phi;
}

std::vector<LieVec> fixed_subalgebra_basis(const LieAlgebraData& L,
                                           const std::vector<LieMap>& autos) {
    const int d = L.dim();
    if (autos.empty()) {
        std::vector<LieVec> all;
        for (int i = 0; i < d; ++i) all.push_back(L.basis_vector(i));
        return all;
    }
    RatMatrix stacked(autos.size() * d, d);
    for (std::size_t a = 0; a < autos.size(); ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rat v = autos[a].matrix.at(i, j);
                if (i == j) v -= Rat(1);
                stacked.at(a * d + i, j) = v;
            }
    return stacked.kernel_basis();
}

namespace {

// Coordinates of v in the span of `basis` (RREF rows); throws if outside.
RatVec coords_in_span(const std::vector<RatVec>& basis, const RatVec& v) {
    if (basis.empty()) {
        for (const auto& c : v)
            if (!c.is_zero()) throw std::logic_error("coords_in_span: not in span");
        return {};
    }
    const std::size_t d = v.size();
    RatMatrix m(d, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = basis[j][i];
    auto sol = m.solve(v);
    if (!sol) throw std::logic_error("coords_in_span: not in span");
    return *sol;
}

RatVec scale_primitive(const RatVec& v) {
    Int l(1), g(0);
    for (const auto& c : v)
        if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rat(l);
    for (const auto& c : out)
        if (!c.is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    if (g == 0) return out;
    int lead = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!out[i].is_zero()) { lead = out[i].sign(); break; }
    if (lead < 0) g = -g;
    for (auto& c : out) c /= Rat(g);
    return out;
}

}  // namespace

std::vector<IdentifiedComponent> identify_semisimple(const LieAlgebraData& L,
                                                     const std::vector<LieVec>& basis) {
    const int d = L.dim();
    const int np = L.npos();
    // Torus: intersection of span(basis) with the Cartan of L.
    RatMatrix bmat(d, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < d; ++i) bmat.at(i, j) = basis[j][i];
    RatMatrix offcartan(d - L.rs.rank, basis.size());
    {
        int r = 0;
        for (int i = 0; i < d; ++i) {
            if (i >= np && i < np + L.rs.rank) continue;
            for (std::size_t j = 0; j < basis.size(); ++j) offcartan.at(r, j) = bmat.at(i, j);
            ++r;
        }
    }
    std::vector<RatVec> torus;
    for (const auto& c : offcartan.kernel_basis()) {
        RatVec t(d);
        for (int i = 0; i < d; ++i) {
            Rat v;
            for (std::size_t j = 0; j < basis.size(); ++j) v += bmat.at(i, j) * c[j];
            t[i] = v;
        }
        torus.push_back(t);
    }
    if (torus.empty()) throw std::logic_error("identify_semisimple: no toral part");

    // Partition the ambient root spaces by restricted weight.
    std::map<std::vector<Rat>, std::vector<int>> classes;  // weight -> basis indices of L
    for (int a = 0; a < np; ++a) {
        for (int sign = 0; sign < 2; ++sign) {
            std::vector<Rat> w;
            for (const auto& t : torus) {
                Rat v = L.root_eval_on_cartan(L.rs.positives[a], t);
                w.push_back(sign ? -v : v);
            }
            bool zero = true;
            for (const auto& x : w)
                if (!x.is_zero()) zero = false;
            if (zero) continue;  // root space centralizing the torus: not in S for our cases
            classes[w].push_back(sign ? L.f_index(a) : L.e_index(a));
        }
    }
    // Weight spaces of S: project each S-basis vector to each class support.
    std::map<std::vector<Rat>, std::vector<RatVec>> wspaces;
    for (const auto& [w, idxs] : classes) {
        std::vector<RatVec> rows;
        for (const auto& b : basis) {
            RatVec v(d);
            bool nz = false;
            for (int i : idxs) {
                v[i] = b[i];
                if (!b[i].is_zero()) nz = true;
            }
            if (nz) rows.push_back(v);
        }
        if (rows.empty()) continue;
        auto rr = rref_normalize(std::move(rows));
        if (rr.size() > 1)
            throw std::logic_error("identify_semisimple: weight multiplicity > 1 (torus not regular)");
        wspaces[w] = std::move(rr);
    }

    // Weights of S; positivity by lex sign of the weight vector.
    std::vector<std::vector<Rat>> pos_weights;
    for (const auto& [w, sp] : wspaces) {
        (void)sp;
        int lead = 0;
        for (const auto& c : w)
            if (!c.is_zero()) { lead = c.sign(); break; }
        if (lead > 0) pos_weights.push_back(w);
    }
    // Simple = positive and not a sum of two positive weights.
    auto add_w = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        return s;
    };
    std::vector<std::vector<Rat>> simple;
    for (const auto& w : pos_weights) {
        bool decomposable = false;
        for (const auto& u : pos_weights) {
            for (const auto& v : pos_weights)
                if (add_w(u, v) == w) { decomposable = true; break; }
            if (decomposable) break;
        }
        if (!decomposable) simple.push_back(w);
    }
    std::sort(simple.begin(), simple.end());

    // sl2 data per simple weight.
    struct SimpleRootData {
        std::vector<Rat> weight;
        RatVec e, f, h;  // in L coordinates
    };
    std::vector<SimpleRootData> sr;
    auto eval_weight_on = [&](const std::vector<Rat>& w, const RatVec& h) {
        // h in torus span: express in torus basis, pair with weight coords.
        auto c = coords_in_span(torus, h);
        Rat v;
        for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * w[i];
        return v;
    };
    for (const auto& w : simple) {
        SimpleRootData s;
        s.weight = w;
        s.e = scale_primitive(wspaces.at(w)[0]);
        std::vector<Rat> mw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) mw[i] = -w[i];
        RatVec f0 = scale_primitive(wspaces.at(mw)[0]);
        RatVec h0 = L.bracket(s.e, f0);
        Rat lam = eval_weight_on(w, h0);
        if (lam.is_zero()) throw std::logic_error("identify_semisimple: degenerate sl2");
        Rat c = Rat(2) / lam;
        s.f = f0;
        for (auto& x : s.f) x *= c;
        s.h = L.bracket(s.e, s.f);
        sr.push_back(std::move(s));
    }

    // Cartan integers a[i][j] = <weight_j, h_i>.
    const int k = static_cast<int>(sr.size());
    std::vector<std::vector<int>> cart(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat v = eval_weight_on(sr[j].weight, sr[i].h);
            if (!v.is_integer()) throw std::logic_error("identify_semisimple: non-integral Cartan");
            cart[i][j] = static_cast<int>(v.num().get_si());
        }

    // Connected components.
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < k; ++v)
                if (comp[v] < 0 && cart[u][v] != 0) { comp[v] = ncomp; stack.push_back(v); }
        }
        ++ncomp;
    }

    std::vector<IdentifiedComponent> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> nodes;
        for (int i = 0; i < k; ++i)
            if (comp[i] == c) nodes.push_back(i);
        const int rk = static_cast<int>(nodes.size());
        // Find (type letter, node permutation) matching a Bourbaki Cartan matrix.
        static const char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
        LieAlgebraData abstract;
        bool found = false;
        std::vector<int> assign(rk);  // abstract node i -> local node assign[i]
        for (char letter : letters) {
            RootSystem cand;
            try {
                cand = build_root_system(letter, rk);
            } catch (const std::invalid_argument&) {
                continue;
            }
            std::vector<int> perm(rk);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (int i = 0; i < rk && ok; ++i)
                    for (int j = 0; j < rk && ok; ++j)
                        if (cand.cartan[i][j] != cart[nodes[perm[i]]][nodes[perm[j]]]) ok = false;
                if (ok) {
                    abstract = build_chevalley(cand);
                    assign = perm;
                    found = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (found) break;
        }
        if (!found) throw std::logic_error("identify_semisimple: unrecognized Cartan matrix");
        std::vector<LieVec> e_img(rk), f_img(rk);
        for (int i = 0; i < rk; ++i) {
            e_img[i] = sr[nodes[assign[i]]].e;
            f_img[i] = sr[nodes[assign[i]]].f;
        }
        IdentifiedComponent ic;
        ic.embedding = extend_hom(abstract, L, e_img, f_img);
        ic.algebra = std::move(abstract);
        if (!is_homomorphism(ic.algebra, L, ic.embedding))
            throw std::logic_error("identify_semisimple: embedding not a homomorphism");
        out.push_back(std::move(ic));
    }
    std::sort(out.begin(), out.end(), [](const IdentifiedComponent& a, const IdentifiedComponent& b) {
        return a.algebra.rs.name() < b.algebra.rs.name();
    });
    return out;
}

RatMatrix ModuleAction::act(const LieVec& x) const {
    RatMatrix m(dimension, dimension);
    for (std::size_t k = 0; k < action.size(); ++k) {
        if (x[k].is_zero()) continue;
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j) {
                const Rat& v = action[k].at(i, j);
                if (!v.is_zero()) m.at(i, j) += x[k] * v;
            }
    }
    return m;
}

SparseIntMat ModuleAction::act_sparse_scaled(const LieVec& x, Rat* scale) const {
    RatMatrix m = act(x);
    Int l(1);
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j)
            if (!m.at(i, j).is_zero())
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    if (scale) *scale = Rat(Int(1), l);
    SparseIntMat s(dimension, dimension);
    for (int j = 0; j < dimension; ++j)
        for (int i = 0; i < dimension; ++i)
            if (!m.at(i, j).is_zero())
                s.col[j].emplace_back(i, m.at(i, j).num() * (l / m.at(i, j).den()));
    return s;
}

bool ModuleAction::representation_identity(const LieAlgebraData& algebra) const {
    const int d = algebra.dim();
    const int m = dimension;
    // Sparse column form of each action matrix; the matrices of basis
    // elements are mostly sparse, which keeps the exhaustive check cheap.
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> sp(d);
    for (int k = 0; k < d; ++k) {
        sp[k].resize(m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i)
                if (!action[k].at(i, j).is_zero()) sp[k][j].emplace_back(i, action[k].at(i, j));
    }
    RatVec colbuf(m);
    auto commutator_col = [&](int i, int j, int c, RatVec& out) {
        // column c of action[i]*action[j] - action[j]*action[i]
        std::fill(out.begin(), out.end(), Rat(0));
        for (const auto& [r1, v1] : sp[j][c])
            for (const auto& [r2, v2] : sp[i][r1]) out[r2] += v1 * v2;
        for (const auto& [r1, v1] : sp[i][c])
            for (const auto& [r2, v2] : sp[j][r1]) out[r2] -= v1 * v2;
    };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const auto& tb = algebra.table(i, j);
            for (int c = 0; c < m; ++c) {
                commutator_col(i, j, c, colbuf);
                for (const auto& [k, v] : tb)
                    for (const auto& [r, w] : sp[k][c]) colbuf[r] -= Rat(v) * w;
                for (const auto& x : colbuf)
                    if (!x.is_zero()) return false;
            }
        }
    return true;
}

ModuleAction isotypic_module(const LieAlgebraData& big, const LieAlgebraData& sub,
                             const LieMap& embedding, const std::vector<LieMap>& operators,
                             const std::vector<Rat>& eigenvalues) {
    const int d = big.dim();
    RatMatrix stacked(operators.size() * d, d);
    for (std::size_t a = 0; a < operators.size(); ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rat v = operators[a].matrix.at(i, j);
                if (i == j) v -= eigenvalues[a];
                stacked.at(a * d + i, j) = v;
            }
    auto eig = stacked.kernel_basis();
    const int m = static_cast<int>(eig.size());
    if (m == 0) throw std::invalid_argument("isotypic_module: empty eigenspace");

    ModuleAction mod;
    mod.dimension = m;
    mod.ambient_basis = RatMatrix(d, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i) mod.ambient_basis.at(i, j) = eig[j][i];

    // eig is an RREF basis: coordinates are read off at the pivot columns,
    // then membership is verified exactly.
    std::vector<int> pivot(m, -1);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i)
            if (!eig[j][i].is_zero()) { pivot[j] = i; break; }

    mod.action.resize(sub.dim());
    for (int k = 0; k < sub.dim(); ++k) {
        LieVec xk(d);
        for (int i = 0; i < d; ++i) xk[i] = embedding.matrix.at(i, k);
        RatMatrix a(m, m);
        for (int j = 0; j < m; ++j) {
            LieVec u = big.bracket(xk, eig[j]);
            RatVec c(m);
            for (int i = 0; i < m; ++i) c[i] = u[pivot[i]];
            LieVec recon(d);
            for (int i = 0; i < m; ++i) {
                if (c[i].is_zero()) continue;
                for (int t = 0; t < d; ++t) recon[t] += c[i] * eig[i][t];
            }
            if (recon != u)
                throw std::invalid_argument("isotypic_module: eigenspace not stable under subalgebra");
            for (int i = 0; i < m; ++i) a.at(i, j) = c[i];
        }
        mod.action[k] = std::move(a);
    }
    return mod;
}

bool jacobi_spot_check(const LieAlgebraData& L, std::uint64_t seed, int count) {
    SmallRng rng(seed);
    const int d = L.dim();
    for (int t = 0; t < count; ++t) {
        int i = static_cast<int>(rng.below(d));
        int j = static_cast<int>(rng.below(d));
        int k = static_cast<int>(rng.below(d));
        LieVec bi = L.basis_vector(i), bj = L.basis_vector(j), bk = L.basis_vector(k);
        LieVec s = L.bracket(L.bracket(bi, bj), bk);
        LieVec t2 = L.bracket(L.bracket(bj, bk), bi);
        LieVec t3 = L.bracket(L.bracket(bk, bi), bj);
        for (int m = 0; m < d; ++m)
            if (!(s[m] + t2[m] + t3[m]).is_zero()) return false;
    }
    return true;
}

}  // namespace slicecert
