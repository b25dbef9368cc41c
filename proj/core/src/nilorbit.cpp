#include "slicecert/nilorbit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slicecert {

bool Sl2Triple::valid(const LieAlgebraData& L) const {
    auto scaled = [](const LieVec& v, long c) {
        LieVec out = v;
        for (auto& x : out) x *= Rat(c);
        return out;
    };
    return L.bracket(h, e) == scaled(e, 2) && L.bracket(h, f) == scaled(f, -2) &&
           L.bracket(e, f) == h;
}

Sl2Triple sl2_complete(const LieAlgebraData& L, const LieVec& e, const LieVec& h) {
    const int d = L.dim();
    const int np = L.npos();
    {
        LieVec he = L.bracket(h, e);
        for (int i = 0; i < d; ++i)
            if (he[i] != e[i] * Rat(2)) throw std::invalid_argument("sl2_complete: [h,e] != 2e");
    }
    bool h_cartan = true;
    for (int i = 0; i < d && h_cartan; ++i)
        if ((i < np || i >= np + L.rs.rank) && !h[i].is_zero()) h_cartan = false;

    std::optional<RatVec> f;
    if (h_cartan) {
        // ad(h) is diagonal; f lives in the (-2)-eigenspace, so solve
        // [e, f] = h over those coordinates only.
        std::vector<int> cols;
        for (int a = 0; a < np; ++a) {
            Rat w = L.root_eval_on_cartan(L.rs.positives[a], h);
            if (w == Rat(2)) cols.push_back(L.f_index(a));
            if (w == Rat(-2)) cols.push_back(L.e_index(a));
        }
        RatMatrix sys(d, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            LieVec img = L.bracket(e, L.basis_vector(cols[c]));
            for (int i = 0; i < d; ++i) sys.at(i, c) = img[i];
        }
        auto sol = sys.solve(h);
        if (sol) {
            RatVec full(d);
            for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = (*sol)[c];
            f = std::move(full);
        }
    } else {
        RatMatrix ade = L.ad_matrix(e);
        RatMatrix adh = L.ad_matrix(h);
        RatMatrix stacked(2 * d, d);
        RatVec rhs(2 * d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                stacked.at(i, j) = ade.at(i, j);
                Rat v = adh.at(i, j);
                if (i == j) v += Rat(2);
                stacked.at(d + i, j) = v;
            }
            rhs[i] = h[i];
        }
        f = stacked.solve(rhs);
    }
    if (!f) throw std::invalid_argument("sl2_complete: h is not the semisimple element for e");
    Sl2Triple t{e, h, *f};
    if (!t.valid(L)) throw std::logic_error("sl2_complete: triple identities failed");
    return t;
}

SlodowySlice slodowy_slice(const LieAlgebraData& L, const Sl2Triple& t) {
    const int d = L.dim();
    const int np = L.npos();
    for (int i = 0; i < d; ++i)
        if ((i < np || i >= np + L.rs.rank) && !t.h[i].is_zero())
            throw std::invalid_argument("slodowy_slice: h must lie in the Cartan");
    // ad(h) is diagonal on the Chevalley basis.
    std::vector<Rat> wt(d);
    for (int a = 0; a < np; ++a) {
        Rat v = L.root_eval_on_cartan(L.rs.positives[a], t.h);
        wt[L.e_index(a)] = v;
        wt[L.f_index(a)] = -v;
    }
    auto kernel = L.ad_matrix(t.e).kernel_basis();
    // Refine each kernel vector into ad(h)-weight components.
    std::map<Rat, std::vector<RatVec>> by_weight;
    for (const auto& v : kernel) {
        std::map<Rat, RatVec> comps;
        for (int i = 0; i < d; ++i) {
            if (v[i].is_zero()) continue;
            auto& c = comps.try_emplace(wt[i], RatVec(d)).first->second;
            c[i] = v[i];
        }
        for (auto& [w, c] : comps) by_weight[w].push_back(std::move(c));
    }
    SlodowySlice s;
    s.triple = t;
    for (auto& [w, vecs] : by_weight) {
        if (!w.is_integer())
            throw std::logic_error("slodowy_slice: non-integer ad(h) weight");
        auto basis = rref_normalize(std::move(vecs));
        for (auto& b : basis) {
            s.centralizer_basis.push_back(std::move(b));
            s.weights.push_back(static_cast<int>(w.num().get_si()));
            s.gm_weights.push_back(static_cast<int>(w.num().get_si()) + 2);
        }
    }
    if (s.centralizer_basis.size() + orbit_dim(L, t.e) != static_cast<std::size_t>(d))
        throw std::logic_error("slodowy_slice: dim g != dim orbit + dim centralizer");
    return s;
}

std::size_t orbit_dim(const LieAlgebraData& L, const LieVec& x) {
    return L.ad_sparse_scaled(x).rank();
}

LieVec cocharacter_from_weighted_diagram(const LieAlgebraData& L, const std::vector<int>& labels) {
    const int r = L.rs.rank;
    RatMatrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.at(i, j) = Rat(L.rs.cartan[j][i]);  // alpha_i(h_j)
    RatVec rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = Rat(labels[i]);
    auto c = m.solve(rhs);
    if (!c) throw std::logic_error("cocharacter: singular Cartan matrix");
    return L.cartan_from_coroot_coords(*c);
}

int max_ad_eigenvalue(const LieAlgebraData& L, const std::vector<int>& labels) {
    int v = 0;
    const auto top = L.rs.highest_root();
    for (int i = 0; i < L.rs.rank; ++i) v += labels[i] * top[i];
    return v;
}

std::vector<int> weighted_diagram_of(const LieAlgebraData& L, const LieVec& h) {
    const int r = L.rs.rank;
    RatVec c(r);
    for (int i = 0; i < r; ++i) c[i] = h[L.h_index(i)];
    auto label = [&](int i) {
        Rat v;
        for (int j = 0; j < r; ++j) v += c[j] * Rat(L.rs.cartan[j][i]);
        return v;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < r; ++i) {
            Rat v = label(i);
            if (v.sign() < 0) {
                c[i] -= v;  // s_i(h) = h - alpha_i(h) alpha_i^vee
                changed = true;
            }
        }
    }
    std::vector<int> out(r);
    for (int i = 0; i < r; ++i) {
        Rat v = label(i);
        if (!v.is_integer()) throw std::logic_error("weighted_diagram_of: non-integral label");
        out[i] = static_cast<int>(v.num().get_si());
    }
    return out;
}

SparseIntMat ActionContext::matrix_of(const std::string& module_ref, const LieVec& x) const {
    if (module_ref == "adjoint") return L->ad_sparse_scaled(x);
    auto it = modules.find(module_ref);
    if (it == modules.end())
        throw std::invalid_argument("ActionContext: unknown module " + module_ref);
    return it->second->act_sparse_scaled(x);
}

bool in_closure(const ActionContext& ctx, const LieVec& x,
                const std::vector<ClosureCriterion>& criteria) {
    for (const auto& c : criteria) {
        SparseIntMat m = ctx.matrix_of(c.module_ref, x);
        if (!c.max_rank) {
            if (!m.power_annihilates(c.power)) return false;
        } else {
            if (m.power_columns(c.power).rank() > *c.max_rank) return false;
        }
    }
    return true;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
}

Partition jordan_partition(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jordan_partition: not square");
    const int n = static_cast<int>(m.rows());
    std::vector<std::size_t> ranks{static_cast<std::size_t>(n)};  // rank(M^0)
    RatMatrix p = m;
    for (int k = 1; k <= n + 1; ++k) {
        std::size_t r = p.rank();
        ranks.push_back(r);
        if (r == 0) break;
        if (k == n + 1) throw std::invalid_argument("jordan_partition: matrix not nilpotent");
        p = p * m;
    }
    // blocks of size >= s: ranks[s-1] - ranks[s]
    Partition out;
    int maxs = static_cast<int>(ranks.size()) - 1;
    for (int s = maxs; s >= 1; --s) {
        long geq_s = static_cast<long>(ranks[s - 1]) - static_cast<long>(ranks[s]);
        long geq_s1 = (s + 1 <= maxs)
                          ? static_cast<long>(ranks[s]) - static_cast<long>(ranks[s + 1])
                          : 0;
        for (long i = 0; i < geq_s - geq_s1; ++i) out.parts.push_back(s);
    }
    return out;
}

LieVec OrbitRecord::rep_vector(const LieAlgebraData& L) const {
    LieVec v = L.zero();
    for (const auto& [idx, c] : standard_rep) v[idx] = c;
    return v;
}

Sl2Triple levi_regular_triple(const LieAlgebraData& L, const std::vector<int>& nodes) {
    const auto& rs = L.rs;
    RatMatrix m(nodes.size(), nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b)
            m.at(a, b) = Rat(rs.cartan[nodes[b]][nodes[a]]);  // alpha_{n_a}(h_{n_b})
    auto sol = m.solve(RatVec(nodes.size(), Rat(2)));
    if (!sol) throw std::logic_error("levi_regular_triple: singular Levi Cartan block");
    LieVec h = L.zero();
    for (std::size_t a = 0; a < nodes.size(); ++a) h[L.h_index(nodes[a])] = (*sol)[a];
    LieVec e = L.zero();
    for (int n : nodes) {
        RootVec r(rs.rank, 0);
        r[n] = 1;
        e[L.e_index(rs.lookup(r).index)] = Rat(1);
    }
    return sl2_complete(L, e, h);
}

namespace {

Sl2Triple generic_level2_triple(const LieAlgebraData& L, const LieVec& h,
                                const std::vector<int>& allowed_pos,
                                std::size_t expected_dim) {
    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        SmallRng rng(0x5ecce5 + attempt);
        LieVec e = L.zero();
        for (int a : allowed_pos) e[L.e_index(a)] = Rat(1 + static_cast<long>(rng.below(7)));
        if (orbit_dim(L, e) != expected_dim) continue;
        return sl2_complete(L, e, h);
    }
    throw std::logic_error("generic_level2_triple: no generic representative found");
}

}  // namespace

Sl2Triple triple_from_diagram(const LieAlgebraData& L, const std::vector<int>& labels,
                              std::size_t expected_dim) {
    LieVec h = cocharacter_from_weighted_diagram(L, labels);
    std::vector<int> level2;
    for (int a = 0; a < L.npos(); ++a)
        if (L.root_eval_on_cartan(L.rs.positives[a], h) == Rat(2)) level2.push_back(a);
    return generic_level2_triple(L, h, level2, expected_dim);
}

Sl2Triple standard_triple(const LieAlgebraData& L, const OrbitRecord& rec) {
    switch (rec.recipe.kind) {
        case OrbitRecipe::LeviRegular:
            return levi_regular_triple(L, rec.recipe.levi_nodes);
        case OrbitRecipe::HighestRoot: {
            auto top = L.rs.highest_root();
            LieVec e = L.e_alpha(top);
            return sl2_complete(L, e, L.coroot(top));
        }
        case OrbitRecipe::Diagram:
            return triple_from_diagram(L, rec.weighted_dynkin, rec.dimension);
        case OrbitRecipe::LeviDistinguished: {
            const auto& nodes = rec.recipe.levi_nodes;
            const auto& labels = rec.recipe.levi_labels;
            RatMatrix m(nodes.size(), nodes.size());
            for (std::size_t a = 0; a < nodes.size(); ++a)
                for (std::size_t b = 0; b < nodes.size(); ++b)
                    m.at(a, b) = Rat(L.rs.cartan[nodes[b]][nodes[a]]);
            RatVec rhs(nodes.size());
            for (std::size_t a = 0; a < nodes.size(); ++a) rhs[a] = Rat(labels[a]);
            auto sol = m.solve(rhs);
            if (!sol) throw std::logic_error("standard_triple: singular Levi Cartan block");
            LieVec h = L.zero();
            for (std::size_t a = 0; a < nodes.size(); ++a) h[L.h_index(nodes[a])] = (*sol)[a];
            // Positive roots supported on the Levi with h-level 2.
            std::vector<int> allowed;
            for (int a = 0; a < L.npos(); ++a) {
                const auto& root = L.rs.positives[a];
                bool in_levi = true;
                for (int i = 0; i < L.rs.rank; ++i)
                    if (root[i] &&
                        std::find(nodes.begin(), nodes.end(), i) == nodes.end())
                        in_levi = false;
                if (in_levi && L.root_eval_on_cartan(root, h) == Rat(2)) allowed.push_back(a);
            }
            return generic_level2_triple(L, h, allowed, rec.dimension);
        }
        case OrbitRecipe::Explicit: {
            LieVec e = rec.rep_vector(L);
            LieVec f = L.zero();
            for (const auto& [idx, c] : rec.recipe.explicit_f) f[idx] = c;
            LieVec h = L.bracket(e, f);
            Sl2Triple t{e, h, f};
            if (!t.valid(L)) throw std::logic_error("standard_triple: explicit triple invalid");
            return t;
        }
    }
    throw std::logic_error("standard_triple: unknown recipe");
}

const OrbitRecord* OrbitCatalog::find(const std::string& algebra, const std::string& label) const {
    for (const auto& r : records_)
        if (r.algebra == algebra && r.label == label) return &r;
    return nullptr;
}

std::vector<std::string> OrbitCatalog::labels(const std::string& algebra) const {
    std::vector<std::string> out;
    for (const auto& r : records_)
        if (r.algebra == algebra) out.push_back(r.label);
    return out;
}

void OrbitCatalog::validate(const OrbitRecord& rec, const LieAlgebraData& L,
                            const ActionContext& ctx) {
    if (rec.data_only) return;
    LieVec x = rec.rep_vector(L);
    if (orbit_dim(L, x) != rec.dimension)
        throw std::logic_error("orbit record " + rec.label + ": rank(ad rep) != dimension");
    if (!rec.criteria.empty() && !in_closure(ctx, x, rec.criteria))
        throw std::logic_error("orbit record " + rec.label + ": rep fails its own criteria");
    if (!rec.weighted_dynkin.empty()) {
        Sl2Triple t = standard_triple(L, rec);
        if (weighted_diagram_of(L, t.h) != rec.weighted_dynkin)
            throw std::logic_error("orbit record " + rec.label + ": weighted diagram mismatch");
    }
}

namespace {

std::string rat_tok(const Rat& r) { return r.str(); }

}  // namespace

void OrbitCatalog::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    out << "# slicecert orbit data v1\n";
    for (const auto& r : records_) {
        out << "orbit " << r.algebra << " " << r.label << "\n";
        out << "paper " << r.paper_ref << "\n";
        if (!r.weighted_dynkin.empty()) {
            out << "wdd";
            for (int l : r.weighted_dynkin) out << " " << l;
            out << "\n";
        }
        out << "dim " << r.dimension << "\n";
        switch (r.recipe.kind) {
            case OrbitRecipe::LeviRegular:
                out << "recipe levi";
                for (int n : r.recipe.levi_nodes) out << " " << n;
                out << "\n";
                break;
            case OrbitRecipe::LeviDistinguished:
                out << "recipe levidist " << r.recipe.levi_nodes.size();
                for (int n : r.recipe.levi_nodes) out << " " << n;
                for (int l : r.recipe.levi_labels) out << " " << l;
                out << "\n";
                break;
            case OrbitRecipe::Diagram:
                out << "recipe diagram\n";
                break;
            case OrbitRecipe::HighestRoot:
                out << "recipe highroot\n";
                break;
            case OrbitRecipe::Explicit:
                out << "recipe explicit";
                for (const auto& [i, c] : r.recipe.explicit_f) out << " " << i << ":" << rat_tok(c);
                out << "\n";
                break;
        }
        if (!r.standard_rep.empty()) {
            out << "rep";
            for (const auto& [i, c] : r.standard_rep) out << " " << i << ":" << rat_tok(c);
            out << "\n";
        }
        for (const auto& c : r.criteria) {
            out << "criterion " << c.module_ref << " " << c.power << " ";
            if (c.max_rank)
                out << "rank<=" << *c.max_rank;
            else
                out << "nil";
            out << " :: " << c.paper_ref << "\n";
        }
        if (r.data_only) out << "dataonly\n";
        out << "end\n";
    }
}

OrbitCatalog OrbitCatalog::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("orbit data file not found: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "# slicecert orbit data v1")
        throw std::runtime_error("orbit data: bad header");
    OrbitCatalog cat;
    OrbitRecord cur;
    bool open = false;
    auto parse_sparse = [](std::istringstream& ls) {
        std::vector<std::pair<int, Rat>> v;
        std::string tok;
        while (ls >> tok) {
            auto colon = tok.find(':');
            v.emplace_back(std::stoi(tok.substr(0, colon)), Rat(tok.substr(colon + 1)));
        }
        return v;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "orbit") {
            cur = OrbitRecord{};
            ls >> cur.algebra >> cur.label;
            open = true;
        } else if (key == "paper") {
            std::getline(ls, cur.paper_ref);
            if (!cur.paper_ref.empty() && cur.paper_ref[0] == ' ')
                cur.paper_ref.erase(0, 1);
        } else if (key == "wdd") {
            int v;
            while (ls >> v) cur.weighted_dynkin.push_back(v);
        } else if (key == "dim") {
            ls >> cur.dimension;
        } else if (key == "recipe") {
            std::string kind;
            ls >> kind;
            if (kind == "levi") {
                cur.recipe.kind = OrbitRecipe::LeviRegular;
                int n;
                while (ls >> n) cur.recipe.levi_nodes.push_back(n);
            } else if (kind == "levidist") {
                cur.recipe.kind = OrbitRecipe::LeviDistinguished;
                std::size_t k;
                ls >> k;
                int v;
                std::vector<int> vals;
                while (ls >> v) vals.push_back(v);
                cur.recipe.levi_nodes.assign(vals.begin(), vals.begin() + k);
                cur.recipe.levi_labels.assign(vals.begin() + k, vals.end());
            } else if (kind == "diagram") {
                cur.recipe.kind = OrbitRecipe::Diagram;
            } else if (kind == "highroot") {
                cur.recipe.kind = OrbitRecipe::HighestRoot;
            } else if (kind == "explicit") {
                cur.recipe.kind = OrbitRecipe::Explicit;
                cur.recipe.explicit_f = parse_sparse(ls);
            }
        } else if (key == "rep") {
            cur.standard_rep = parse_sparse(ls);
        } else if (key == "criterion") {
            ClosureCriterion c;
            std::string bound, sep;
            ls >> c.module_ref >> c.power >> bound >> sep;
            if (bound == "nil")
                c.max_rank = std::nullopt;
            else if (bound.rfind("rank<=", 0) == 0)
                c.max_rank = std::stoul(bound.substr(6));
            std::getline(ls, c.paper_ref);
            if (!c.paper_ref.empty() && c.paper_ref[0] == ' ') c.paper_ref.erase(0, 1);
            cur.criteria.push_back(std::move(c));
        } else if (key == "dataonly") {
            cur.data_only = true;
        } else if (key == "end") {
            if (open) cat.records_.push_back(cur);
            open = false;
        }
    }
    return cat;
}

OrbitCatalog OrbitCatalog::generate() {
    OrbitCatalog cat;
    std::map<std::string, LieAlgebraData> algebras;
    auto get = [&](const std::string& name) -> LieAlgebraData& {
        auto it = algebras.find(name);
        if (it == algebras.end())
            it = algebras.emplace(name, build_chevalley(name[0], name[1] - '0')).first;
        return it->second;
    };
    auto add = [&](OrbitRecord rec) {
        auto& L = get(rec.algebra);
        if (!rec.data_only) {
            Sl2Triple t = standard_triple(L, rec);
            std::vector<std::pair<int, Rat>> sparse;
            for (int i = 0; i < L.dim(); ++i)
                if (!t.e[i].is_zero()) sparse.emplace_back(i, t.e[i]);
            rec.standard_rep = std::move(sparse);
            rec.dimension = orbit_dim(L, t.e);
            rec.weighted_dynkin = weighted_diagram_of(L, t.h);
        }
        cat.records_.push_back(std::move(rec));
    };

    auto levi = [&](std::string alg, std::string label, std::vector<int> nodes,
                    std::string ref, std::vector<ClosureCriterion> crit = {}) {
        OrbitRecord r;
        r.algebra = std::move(alg);
        r.label = std::move(label);
        r.recipe.kind = OrbitRecipe::LeviRegular;
        r.recipe.levi_nodes = std::move(nodes);
        r.paper_ref = std::move(ref);
        r.criteria = std::move(crit);
        add(std::move(r));
    };
    auto diagram = [&](std::string alg, std::string label, std::vector<int> wdd, std::size_t dim,
                       std::string ref, std::vector<ClosureCriterion> crit = {}) {
        OrbitRecord r;
        r.algebra = std::move(alg);
        r.label = std::move(label);
        r.recipe.kind = OrbitRecipe::Diagram;
        r.weighted_dynkin = std::move(wdd);
        r.dimension = dim;
        r.paper_ref = std::move(ref);
        r.criteria = std::move(crit);
        add(std::move(r));
    };

    // G2
    {
        OrbitRecord r;
        r.algebra = "G2";
        r.label = "A1";
        r.recipe.kind = OrbitRecipe::HighestRoot;
        r.paper_ref = "Lemma G2minlem: sl2-triple {h=coroot(hat alpha), e=e_{hat alpha}, f=e_{-hat alpha}}";
        add(std::move(r));
    }
    levi("G2", "~A1", {0}, "short-root orbit of G2 (shared pair (2))");
    diagram("G2", "G2(a1)", {0, 2}, 10, "subregular orbit, Lemma G2minlem");

    // F4
    levi("F4", "A2", {0, 1}, "Thm. d4S4thm: f = 2f_{a1}+2f_{a2}, e = e_{a1}+e_{a2}");
    levi("F4", "A2+~A1", {0, 1, 3}, "Thm. F4excslicethm: minimal orbit of the special piece");
    levi("F4", "~A2+A1", {2, 3, 0}, "poset row under F4(a3)");
    levi("F4", "B2", {1, 2}, "poset row under F4(a3)");
    diagram("F4", "F4(a3)", {0, 2, 0, 0}, 40,
            "Thm. F4excslicethm / d4S4thm: the exceptional special orbit",
            {{"f4_26", 5, std::nullopt, "Thm. F4excslicethm: x in closure iff rho(x)^5 = 0"}});

    // E7
    levi("E7", "A3+A2+A1", {4, 5, 6, 0, 2, 1}, "sec. 3.1: base orbit of the E7 slice");
    levi("E7", "A4+A1", {3, 4, 5, 6, 0}, "sec. 3.1: upper orbit of the E7 slice",
         {{"e7_56", 9, std::nullopt, "Remark modularremark(i): rho(x)^9 = 0"},
          {"e7_56", 8, std::size_t(1), "Remark modularremark(i): rank(rho(x)^8) <= 1"}});

    // E8
    levi("E8", "2A2", {0, 2, 5, 6}, "Prop. d4d4Prop: base orbit, reductive centralizer g2+g2");
    {
        OrbitRecord r;
        r.algebra = "E8";
        r.label = "2A2+2A1";
        r.recipe.kind = OrbitRecipe::Explicit;
        r.paper_ref = "Lemma 2A2+2A1lem: e = e_{a1}+e_{a3}+e_{a5}+e_{a6}+e_{a2}+e_{a8}";
        auto& L = get("E8");
        std::vector<std::pair<int, Rat>> e, f;
        for (int n : {0, 2, 4, 5}) {  // alpha_1,3,5,6 with f-coefficient 2
            RootVec rt(8, 0);
            rt[n] = 1;
            int idx = L.rs.lookup(rt).index;
            e.emplace_back(L.e_index(idx), Rat(1));
            f.emplace_back(L.f_index(idx), Rat(2));
        }
        for (int n : {1, 7}) {  // alpha_2, alpha_8 with f-coefficient 1
            RootVec rt(8, 0);
            rt[n] = 1;
            int idx = L.rs.lookup(rt).index;
            e.emplace_back(L.e_index(idx), Rat(1));
            f.emplace_back(L.f_index(idx), Rat(1));
        }
        r.standard_rep = e;
        r.recipe.explicit_f = f;
        add(std::move(r));
    }
    {
        // D4(a1)+A1: distinguished D4(a1) in the D4 Levi {2,3,4,5} plus alpha_7.
        OrbitRecord r;
        r.algebra = "E8";
        r.label = "D4(a1)+A1";
        r.recipe.kind = OrbitRecipe::LeviDistinguished;
        r.recipe.levi_nodes = {1, 2, 3, 4, 6};
        r.recipe.levi_labels = {2, 2, 0, 2, 2};
        r.dimension = 176;
        r.paper_ref = "Lemma 2A2+2A1lem: upper orbit";
        r.criteria = {
            {"adjoint", 7, std::nullopt, "Remark modularremark(ii): (ad x)^7 = 0"},
            {"adjoint", 6, std::size_t(2), "Remark modularremark(ii): rank((ad x)^6) <= 2"}};
        add(std::move(r));
    }
    levi("E8", "A4+A3", {0, 1, 2, 3, 5, 6, 7},
         "Thm. E8excslicethm: base orbit, centralizer of dimension 48");
    levi("E8", "D5+A1", {1, 2, 3, 4, 5, 7},
         "sec. 5.3 proof: orbit above E8(a7); (ad x)^15 = 0 minimally "
         "(the paper prints the nilpotency order as the eigenvalue)");
    levi("E8", "A6", {0, 2, 3, 4, 5, 6},
         "sec. 5.3 proof: orbit above E8(a7); (ad x)^13 = 0 minimally");
    diagram("E8", "E8(a7)", {0, 0, 0, 0, 2, 0, 0, 0}, 208,
            "sec. 5.3: weighted Dynkin diagram nonzero only on the fifth simple root",
            {{"adjoint", 11, std::nullopt, "sec. 5.3: closure is the zero set of (ad x)^11"}});
    diagram("E8", "E8(b6)", {0, 0, 0, 2, 0, 0, 0, 2}, 220,
            "Thm. a2S4thm: base orbit, codimension 4 in the closure of E8(a6)");
    diagram("E8", "E8(a6)", {0, 0, 0, 2, 0, 0, 2, 0}, 224,
            "Thm. a2S4thm: x in closure iff (ad x)^19 = 0",
            {{"adjoint", 19, std::nullopt, "Thm. a2S4thm proof"}});
    {
        OrbitRecord r;
        r.algebra = "E8";
        r.label = "D7(a1)";
        r.dimension = 222;
        r.data_only = true;
        r.paper_ref = "sec. 5.4: unique orbit between E8(b6) and E8(a6); the mu singularity";
        cat.records_.push_back(std::move(r));
    }
    return cat;
}

}  // namespace slicecert
