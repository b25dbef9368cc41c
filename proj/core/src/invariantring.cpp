#include "slicecert/invariantring.hpp"

#include "slicecert/modp.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace slicecert {

namespace {

// ---- packed monomials over the coordinate ring (<= 16 vars, exp <= 15) ----

using PMono = std::uint64_t;

PMono pack_mono(const Mono& m) {
    if (m.size() > 16) throw std::logic_error("invariantring: too many coordinates to pack");
    PMono p = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned e = static_cast<unsigned char>(m[i]);
        if (e > 15) throw std::logic_error("invariantring: exponent too large to pack");
        p |= static_cast<PMono>(e) << (4 * i);
    }
    return p;
}

struct PPoly {
    std::vector<std::pair<PMono, long long>> t;  // sorted by monomial key
};

PPoly to_packed(const Poly& p) {
    PPoly out;
    out.t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_integer()) throw std::logic_error("invariantring: non-integer generator coefficient");
        if (!c.num().fits_slong_p()) throw std::logic_error("invariantring: coefficient overflow");
        out.t.emplace_back(pack_mono(m), c.num().get_si());
    }
    std::sort(out.t.begin(), out.t.end());
    return out;
}

PPoly pmul(const PPoly& a, const PPoly& b) {
    std::unordered_map<PMono, long long> acc;
    acc.reserve(a.t.size() * 2);
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            long long prod;
            if (__builtin_mul_overflow(ca, cb, &prod))
                throw std::overflow_error("invariantring: expansion coefficient overflow");
            auto [it, fresh] = acc.try_emplace(ma + mb, prod);
            if (!fresh && __builtin_add_overflow(it->second, prod, &it->second))
                throw std::overflow_error("invariantring: expansion coefficient overflow");
        }
    PPoly out;
    out.t.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c != 0) out.t.emplace_back(m, c);
    std::sort(out.t.begin(), out.t.end());
    return out;
}

// Monomials over the generators: exponent vectors.
using GenExp = std::vector<int>;

void enumerate_monomials(const std::vector<int>& degrees, int target, int from, GenExp& cur,
                         std::vector<GenExp>& out) {
    if (target == 0) {
        out.push_back(cur);
        return;
    }
    if (from == static_cast<int>(degrees.size())) return;
    int maxe = target / degrees[from];
    for (int e = 0; e <= maxe; ++e) {
        cur[from] = e;
        enumerate_monomials(degrees, target - e * degrees[from], from + 1, cur, out);
    }
    cur[from] = 0;
}

Mono genexp_to_mono(const GenExp& e) {
    Mono m(e.size(), '\0');
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = static_cast<char>(e[i]);
    return m;
}

}  // namespace

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

InvariantGeneratorSet generators_sn(int n, int copies) {
    if (n < 2 || copies < 1) throw std::invalid_argument("generators_sn: need n >= 2, copies >= 1");
    InvariantGeneratorSet g;
    g.n = n;
    g.copies = copies;
    const int nv = 2 * copies;         // vector variables
    const int m = n - 1;               // free coordinates per vector variable
    std::vector<std::string> names;
    for (int a = 0; a < nv; ++a)
        for (int i = 1; i <= m; ++i) {
            std::string base = (a % 2 == 0) ? "x" : "y";
            if (copies > 1) base += std::to_string(a / 2 + 1) + "_";
            names.push_back(base + std::to_string(i));
        }
    g.coord_ring = make_ring(names);

    // Coordinate polynomials including the eliminated n-th entry.
    auto coord = [&](int a, int entry) {  // entry in [0, n)
        if (entry < m) return Poly::variable(g.coord_ring, a * m + entry);
        Poly s(g.coord_ring);
        for (int i = 0; i < m; ++i) s -= Poly::variable(g.coord_ring, a * m + i);
        return s;
    };

    // Multidegrees 2 <= |alpha| <= n in (degree, lex) order.
    std::vector<GenExp> alphas;
    for (int d = 2; d <= n; ++d) {
        GenExp cur(nv, 0);
        std::vector<GenExp> level;
        std::vector<int> unit_degrees(nv, 1);
        enumerate_monomials(unit_degrees, d, 0, cur, level);
        std::sort(level.begin(), level.end());
        for (auto& a : level) alphas.push_back(a);
    }
    for (const auto& alpha : alphas) {
        InvariantGeneratorSet::Generator gen;
        gen.multidegree = alpha;
        gen.degree = 0;
        for (int e : alpha) gen.degree += e;
        Poly sum(g.coord_ring);
        for (int entry = 0; entry < n; ++entry) {
            Poly term = Poly::constant(g.coord_ring, Rat(1));
            for (int a = 0; a < nv; ++a)
                for (int e = 0; e < alpha[a]; ++e) term = term * coord(a, entry);
            sum = sum + term;
        }
        gen.poly = std::move(sum);
        gen.symbol = "g";
        for (int e : alpha) gen.symbol += std::to_string(e);
        g.gens.push_back(std::move(gen));
    }
    return g;
}

bool InvariantGeneratorSet::invariance_check() const {
    const int nv = 2 * copies;
    const int m = n - 1;
    auto var = [&](int a, int i) { return Poly::variable(coord_ring, a * m + i); };
    auto neg_sum = [&](int a) {
        Poly s(coord_ring);
        for (int i = 0; i < m; ++i) s -= var(a, i);
        return s;
    };
    // sigma acting on functions: substitute coordinate u_i -> u_{sigma(i)}.
    // Transposition (1 2): swap entries 1, 2 (indices 0, 1); for n = 2 the
    // transposition is the sign flip on the single free coordinate.
    std::vector<Poly> swap_images, cycle_images;
    for (int a = 0; a < nv; ++a)
        for (int i = 0; i < m; ++i) {
            Poly im;
            if (n == 2)
                im = neg_sum(a);
            else if (i == 0)
                im = var(a, 1);
            else if (i == 1)
                im = var(a, 0);
            else
                im = var(a, i);
            swap_images.push_back(im);
            // n-cycle (1 2 ... n): u_i -> u_{i+1}, last free -> -sum.
            Poly imc = (i == m - 1) ? neg_sum(a) : var(a, i + 1);
            cycle_images.push_back(imc);
        }
    for (const auto& gen : gens) {
        if (!(gen.poly.substituted(coord_ring, swap_images) == gen.poly)) return false;
        if (!(gen.poly.substituted(coord_ring, cycle_images) == gen.poly)) return false;
    }
    return true;
}

namespace {

struct StratumSpan {
    std::vector<int> multidegree;
    std::vector<GenExp> columns;                 // fixed order
    std::vector<RatVec> kernel_rref;             // confirmed kernel, RREF rows
};

struct DegreeWork {
    int degree;
    std::vector<StratumSpan> strata;
};

}  // namespace

struct RelationEngine {
    const InvariantGeneratorSet& G;
    std::uint64_t seed;
    int resamples = 0;

    std::vector<PPoly> packed_gens;
    // Expansion cache: generator-exponent vector -> expanded polynomial.
    std::map<GenExp, PPoly> cache;

    explicit RelationEngine(const InvariantGeneratorSet& g, std::uint64_t s) : G(g), seed(s) {
        for (const auto& gen : G.gens) packed_gens.push_back(to_packed(gen.poly));
    }

    const PPoly& expand(const GenExp& e) {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        int last = -1;
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            if (e[i] > 0) last = i;
        PPoly result;
        if (last < 0) {
            result.t.emplace_back(0, 1);
        } else {
            GenExp prefix = e;
            prefix[last] -= 1;
            result = pmul(expand(prefix), packed_gens[last]);
        }
        return cache.emplace(e, std::move(result)).first->second;
    }

    // Exact confirmation that sum_m coeffs[m] * expand(columns[m]) == 0.
    bool confirm(const std::vector<GenExp>& columns, const RatVec& coeffs) {
        Int l(1);
        for (const auto& c : coeffs)
            if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        std::unordered_map<PMono, __int128> acc;
        for (std::size_t m = 0; m < columns.size(); ++m) {
            if (coeffs[m].is_zero()) continue;
            Int scaled = coeffs[m].num() * (l / coeffs[m].den());
            if (!scaled.fits_slong_p())
                throw std::overflow_error("invariantring: confirmation coefficient too large");
            long long c = scaled.get_si();
            for (const auto& [mono, v] : expand(columns[m]).t)
                acc[mono] += static_cast<__int128>(c) * v;
        }
        for (const auto& [mono, v] : acc) {
            (void)mono;
            if (v != 0) return false;
        }
        return true;
    }

    // Deterministic integer sample points for a given degree/attempt.
    std::vector<std::vector<long>> sample_points(int degree, int attempt, int count) {
        SmallRng rng(seed ^ (0x9e37u * (degree + 101 * attempt)));
        std::vector<std::vector<long>> pts(count);
        for (auto& p : pts) {
            p.resize(G.coord_ring->nvars());
            for (auto& v : p) v = rng.range(-9, 9);
        }
        return pts;
    }

    // Values of all generators at the points, mod p.
    std::vector<std::vector<std::uint64_t>> gen_values(
        const std::vector<std::vector<long>>& pts, const Fp& f) {
        std::vector<std::vector<std::uint64_t>> vals(pts.size(),
                                                     std::vector<std::uint64_t>(G.gens.size()));
        const int nv = static_cast<int>(G.coord_ring->nvars());
        for (std::size_t t = 0; t < pts.size(); ++t) {
            // power tables per variable
            std::vector<std::array<std::uint64_t, 16>> pw(nv);
            for (int v = 0; v < nv; ++v) {
                std::uint64_t base =
                    pts[t][v] >= 0 ? static_cast<std::uint64_t>(pts[t][v]) % f.p
                                   : f.p - (static_cast<std::uint64_t>(-pts[t][v]) % f.p);
                pw[v][0] = 1;
                for (int e = 1; e < 16; ++e) pw[v][e] = f.mul(pw[v][e - 1], base);
            }
            for (std::size_t gidx = 0; gidx < G.gens.size(); ++gidx) {
                std::uint64_t s = 0;
                for (const auto& [m, c] : G.gens[gidx].poly.terms()) {
                    std::uint64_t term = f.from_int(c.num());
                    for (int v = 0; v < nv; ++v) {
                        unsigned e = static_cast<unsigned char>(m[v]);
                        if (e) term = f.mul(term, pw[v][e]);
                    }
                    s = f.add(s, term);
                }
                vals[t][gidx] = s;
            }
        }
        return vals;
    }

    // Confirmed kernel of one stratum; throws after bounded resampling.
    std::vector<RatVec> stratum_kernel(int degree, const std::vector<GenExp>& columns) {
        const std::size_t ncols = columns.size();
        for (int attempt = 0; attempt < 6; ++attempt) {
            if (attempt > 0) ++resamples;
            int npts = static_cast<int>(ncols) + 12;
            auto pts = sample_points(degree, attempt, npts);

            auto matrix_mod = [&](const Fp& f) {
                auto gv = gen_values(pts, f);
                std::vector<std::vector<std::uint64_t>> m(npts,
                                                          std::vector<std::uint64_t>(ncols));
                for (int t = 0; t < npts; ++t)
                    for (std::size_t c = 0; c < ncols; ++c) {
                        std::uint64_t v = 1;
                        for (std::size_t g = 0; g < columns[c].size(); ++g)
                            for (int e = 0; e < columns[c][g]; ++e) v = f.mul(v, gv[t][g]);
                        m[t][c] = v;
                    }
                return m;
            };

            Fp f0{kPrimes62[0]}, f1{kPrimes62[1]};
            auto k0 = kernel_mod_p(matrix_mod(f0), ncols, f0);
            auto k1 = kernel_mod_p(matrix_mod(f1), ncols, f1);
            if (k0.size() != k1.size()) continue;  // unlucky points for one prime
            if (k0.empty()) return {};

            // CRT-lift entry by entry, adding primes until reconstruction holds.
            std::vector<std::vector<std::vector<std::uint64_t>>> kers{k0, k1};
            std::vector<std::uint64_t> primes{kPrimes62[0], kPrimes62[1]};
            std::vector<RatVec> lifted;
            bool ok = true;
            for (std::size_t np = 2; np <= 6 && ok; ++np) {
                lifted.assign(k0.size(), RatVec(ncols));
                bool all = true;
                for (std::size_t r = 0; r < k0.size() && all; ++r)
                    for (std::size_t c = 0; c < ncols && all; ++c) {
                        std::vector<std::uint64_t> res;
                        for (std::size_t i = 0; i < primes.size(); ++i) res.push_back(kers[i][r][c]);
                        Int m = 1;
                        for (auto p : primes) m *= Int(p);
                        auto rec = rational_reconstruct(crt_combine(res, primes), m);
                        if (!rec) { all = false; break; }
                        lifted[r][c] = *rec;
                    }
                if (all) break;
                if (np == 6) { ok = false; break; }
                Fp fn{kPrimes62[np]};
                auto kn = kernel_mod_p(matrix_mod(fn), ncols, fn);
                if (kn.size() != k0.size()) { ok = false; break; }
                kers.push_back(kn);
                primes.push_back(kPrimes62[np]);
            }
            if (!ok) continue;

            bool confirmed = true;
            for (const auto& v : lifted)
                if (!confirm(columns, v)) { confirmed = false; break; }
            if (!confirmed) continue;  // kernel mod p was too big; resample
            return lifted;
        }
        throw std::runtime_error("relations: sampling failed to stabilize (stratum of degree " +
                                 std::to_string(degree) + ")");
    }
};

std::map<int, int> RelationBasis::degree_counts() const {
    std::map<int, int> out;
    for (const auto& b : blocks)
        if (!b.new_relations.empty()) out[b.degree] = static_cast<int>(b.new_relations.size());
    return out;
}

int RelationBasis::total_new() const {
    int t = 0;
    for (const auto& b : blocks) t += static_cast<int>(b.new_relations.size());
    return t;
}

const RelationBasis::DegreeBlock* RelationBasis::block(int degree) const {
    for (const auto& b : blocks)
        if (b.degree == degree) return &b;
    return nullptr;
}

namespace {

// Reduce v against RREF rows (each with leading 1); returns the residue.
RatVec reduce_against(const std::vector<RatVec>& rref, const RatVec& v) {
    RatVec r = v;
    for (const auto& row : rref) {
        std::size_t lead = row.size();
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero()) { lead = i; break; }
        if (lead == row.size()) continue;
        if (r[lead].is_zero()) continue;
        Rat f = r[lead];
        for (std::size_t i = lead; i < row.size(); ++i) r[i] -= f * row[i];
    }
    return r;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Insert v into an RREF accumulation; returns false if v was dependent.
bool rref_insert(std::vector<RatVec>& rref, const RatVec& v) {
    RatVec r = reduce_against(rref, v);
    std::size_t lead = r.size();
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) { lead = i; break; }
    if (lead == r.size()) return false;
    Rat inv = r[lead].inv();
    for (auto& x : r) x *= inv;
    for (auto& row : rref) {
        if (row[lead].is_zero()) continue;
        Rat f = row[lead];
        for (std::size_t i = 0; i < row.size(); ++i) row[i] -= f * r[i];
    }
    rref.push_back(std::move(r));
    std::sort(rref.begin(), rref.end(), [](const RatVec& a, const RatVec& b) {
        std::size_t la = a.size(), lb = b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) { la = i; break; }
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!b[i].is_zero()) { lb = i; break; }
        return la < lb;
    });
    return true;
}

}  // namespace

RelationBasis relations_up_to_degree(const InvariantGeneratorSet& G, int max_degree,
                                     std::uint64_t seed) {
    RelationBasis rb;
    rb.n = G.n;
    rb.copies = G.copies;
    rb.max_degree = max_degree;
    rb.seed = seed;
    std::vector<std::string> sym;
    for (const auto& g : G.gens) sym.push_back(g.symbol);
    rb.gen_ring = make_ring(sym);
    for (const auto& g : G.gens) {
        rb.gen_degrees.push_back(g.degree);
        rb.gen_multidegrees.push_back(g.multidegree);
    }

    RelationEngine eng(G, seed);
    const int ngens = static_cast<int>(G.gens.size());
    const int nv = 2 * G.copies;

    // All monomials per degree, split into multidegree strata.
    std::vector<DegreeWork> work;
    for (int d = 2; d <= max_degree; ++d) {
        std::vector<GenExp> monos;
        GenExp cur(ngens, 0);
        enumerate_monomials(rb.gen_degrees, d, 0, cur, monos);
        // Deterministic column order: descending graded-lex over gen symbols.
        std::sort(monos.begin(), monos.end(), [](const GenExp& a, const GenExp& b) {
            return mono_less_glex(genexp_to_mono(b), genexp_to_mono(a));
        });
        DegreeWork w;
        w.degree = d;
        std::map<std::vector<int>, std::vector<GenExp>> by_stratum;
        for (const auto& m : monos) {
            std::vector<int> mu(nv, 0);
            for (int g = 0; g < ngens; ++g)
                for (int a = 0; a < nv; ++a) mu[a] += m[g] * G.gens[g].multidegree[a];
            by_stratum[mu].push_back(m);
        }
        for (auto& [mu, cols] : by_stratum) {
            StratumSpan s;
            s.multidegree = mu;
            s.columns = std::move(cols);
            w.strata.push_back(std::move(s));
        }
        work.push_back(std::move(w));
    }

    // Kernel per stratum, then new counts modulo lower-degree consequences.
    std::map<int, std::vector<Poly>> kernel_by_degree;
    for (auto& w : work) {
        RelationBasis::DegreeBlock blk;
        blk.degree = w.degree;
        for (auto& s : w.strata) {
            if (s.columns.size() < 2) continue;
            auto kernel = eng.stratum_kernel(w.degree, s.columns);
            s.kernel_rref = kernel;

            // Consequences within this stratum: r * monomial for lower r.
            std::vector<RatVec> conseq_rref;
            std::size_t conseq_rank = 0;
            std::map<Mono, std::size_t> col_index;
            for (std::size_t c = 0; c < s.columns.size(); ++c)
                col_index[genexp_to_mono(s.columns[c])] = c;
            for (const auto& [dlow, rels] : kernel_by_degree) {
                int need = w.degree - dlow;
                if (need < 2) continue;
                std::vector<GenExp> ms;
                GenExp cur(ngens, 0);
                enumerate_monomials(rb.gen_degrees, need, 0, cur, ms);
                for (const auto& r : rels) {
                    for (const auto& m : ms) {
                        Poly mono(rb.gen_ring);
                        mono.add_term(genexp_to_mono(m), Rat(1));
                        Poly prod = r * mono;
                        // Row only if it lands in this stratum.
                        RatVec row(s.columns.size());
                        bool in_stratum = !prod.is_zero();
                        for (const auto& [mm, c] : prod.terms()) {
                            auto it = col_index.find(mm);
                            if (it == col_index.end()) { in_stratum = false; break; }
                            row[it->second] = c;
                        }
                        if (in_stratum && rref_insert(conseq_rref, row)) ++conseq_rank;
                    }
                }
            }
            blk.consequence_rank += conseq_rank;

            // Confirmed kernel vectors as gen-ring polynomials; the ones
            // independent of the consequences are the new relations.
            for (const auto& v : kernel) {
                Poly rel(rb.gen_ring);
                for (std::size_t c = 0; c < s.columns.size(); ++c)
                    if (!v[c].is_zero()) rel.add_term(genexp_to_mono(s.columns[c]), v[c]);
                blk.kernel.push_back(rel);
                if (rref_insert(conseq_rref, v)) blk.new_relations.push_back(rel);
            }
        }
        if (!blk.kernel.empty()) {
            kernel_by_degree[w.degree] = blk.kernel;
            blk.degree = w.degree;
            rb.blocks.push_back(std::move(blk));
        }
    }
    rb.resamples = eng.resamples;

    // Keep stratum spans for membership testing.
    for (auto& w : work)
        for (auto& s : w.strata)
            if (!s.kernel_rref.empty()) {
                RelationBasis::Span span;
                span.degree = w.degree;
                span.multidegree = s.multidegree;
                span.columns = std::move(s.columns);
                span.kernel = std::move(s.kernel_rref);
                rb.spans.push_back(std::move(span));
            }
    return rb;
}

bool RelationBasis::contains(const Poly& candidate) const {
    if (candidate.is_zero()) return true;
    // Split by stratum (weighted degree + multidegree over vector variables);
    // the relation ideal is multigraded, so membership splits stratum-wise.
    const int nv = 2 * copies;
    std::map<std::pair<int, std::vector<int>>, Poly> parts;
    for (const auto& [m, c] : candidate.terms()) {
        int deg = 0;
        std::vector<int> mu(nv, 0);
        for (std::size_t g = 0; g < m.size(); ++g) {
            int e = static_cast<unsigned char>(m[g]);
            if (!e) continue;
            deg += e * gen_degrees[g];
            for (int a = 0; a < nv; ++a) mu[a] += e * gen_multidegrees[g][a];
        }
        auto& p = parts.try_emplace({deg, mu}, Poly(gen_ring)).first->second;
        p.add_term(m, c);
    }
    for (const auto& [key, part] : parts) {
        const Span* span = nullptr;
        for (const auto& s : spans)
            if (s.degree == key.first && s.multidegree == key.second) { span = &s; break; }
        if (!span) return false;
        RatVec v(span->columns.size());
        std::map<Mono, std::size_t> col_index;
        for (std::size_t c = 0; c < span->columns.size(); ++c)
            col_index[genexp_to_mono(span->columns[c])] = c;
        for (const auto& [m, c] : part.terms()) {
            auto it = col_index.find(m);
            if (it == col_index.end()) return false;
            v[it->second] = c;
        }
        if (!is_zero_vec(reduce_against(span->kernel, v))) return false;
    }
    return true;
}

void RelationBasis::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    out << "# slicecert relation basis v1\n";
    out << "# n=" << n << " copies=" << copies << " max_degree=" << max_degree
        << " seed=" << seed << "\n";
    out << "# generators:";
    for (std::size_t i = 0; i < gen_ring->vars.size(); ++i)
        out << " " << gen_ring->vars[i] << "(deg " << gen_degrees[i] << ")";
    out << "\n";
    for (const auto& b : blocks)
        for (const auto& r : b.new_relations)
            out << "deg " << b.degree << ": " << r.str() << "\n";
}

std::map<int, int> conjecture_counts(int n) {
    std::map<int, int> out;
    for (int j = 1; j <= n - 1; ++j) {
        int c = j * (j + 1) * (n - j) / 2;
        if (c > 0) out[n + j + 1] = c;
    }
    return out;
}

ConjectureReport conjecture_check(int n, const RelationBasis& computed) {
    ConjectureReport rep;
    rep.n = n;
    auto pred = conjecture_counts(n);
    auto got = computed.degree_counts();
    std::map<int, std::pair<int, int>> merged;
    for (const auto& [d, c] : pred) merged[d].second = c;
    for (const auto& [d, c] : got) merged[d].first = c;
    rep.per_degree = merged;
    rep.total_computed = computed.total_new();
    rep.total_predicted = static_cast<int>(binomial(n + 2, 4));
    rep.match = rep.total_computed == rep.total_predicted;
    for (const auto& [d, pc] : merged)
        if (pc.first != pc.second) rep.match = false;
    return rep;
}

std::string ConjectureReport::str() const {
    std::ostringstream os;
    os << "n=" << n << ": ";
    for (const auto& [d, pc] : per_degree)
        os << "deg" << d << ":" << pc.first << (pc.first == pc.second ? "" : "!") << " ";
    os << "total " << total_computed << "/" << total_predicted << " predicted; "
       << (match ? "match" : "MISMATCH");
    return os.str();
}

}  // namespace slicecert
