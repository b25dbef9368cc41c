#pragma once

#include "slicecert/chevalley.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slicecert {

struct Sl2Triple {
    LieVec e, h, f;
    /// [h,e] = 2e, [h,f] = -2f, [e,f] = h, all exact.
    bool valid(const LieAlgebraData& L) const;
};

/// Complete (e, h) to an sl2-triple: solve [e,f] = h, [h,f] = -2f.
/// Deterministic (RREF particular solution).  Throws if no solution.
Sl2Triple sl2_complete(const LieAlgebraData& L, const LieVec& e, const LieVec& h);

/// Slodowy slice data: centralizer of e graded by ad(h)-weight; the
/// Gm-action on f + g^e scales the weight-w coordinate by t^{w+2}.
struct SlodowySlice {
    Sl2Triple triple;
    std::vector<LieVec> centralizer_basis;
    std::vector<int> weights;     // ad(h)-eigenvalue per basis vector
    std::vector<int> gm_weights;  // weights + 2
};

/// Requires h in the Cartan (true for every triple built here), so the
/// eigenvector refinement is a coordinate regrouping.
SlodowySlice slodowy_slice(const LieAlgebraData& L, const Sl2Triple& t);

/// dim G.x = rank(ad x).
std::size_t orbit_dim(const LieAlgebraData& L, const LieVec& x);

/// The Cartan element h with alpha_i(h) = labels_i.
LieVec cocharacter_from_weighted_diagram(const LieAlgebraData& L, const std::vector<int>& labels);

/// Largest ad(h)-eigenvalue of the cocharacter = <labels, highest root>.
int max_ad_eigenvalue(const LieAlgebraData& L, const std::vector<int>& labels);

/// Weighted Dynkin diagram of a Cartan element: dominant Weyl representative
/// of its coroot coordinates, read off against the simple roots.
std::vector<int> weighted_diagram_of(const LieAlgebraData& L, const LieVec& h);

/// One (module, power, bound) closure condition; max_rank empty means the
/// power must vanish.
struct ClosureCriterion {
    std::string module_ref;  // "adjoint" or a module name resolved by context
    unsigned power = 0;
    std::optional<std::size_t> max_rank;
    std::string paper_ref;
};

/// Resolves module references to action matrices for criteria evaluation.
struct ActionContext {
    const LieAlgebraData* L = nullptr;
    std::map<std::string, const ModuleAction*> modules;

    SparseIntMat matrix_of(const std::string& module_ref, const LieVec& x) const;
};

/// All criteria hold; powers are applied column by column so the full matrix
/// power is never materialized.
bool in_closure(const ActionContext& ctx, const LieVec& x,
                const std::vector<ClosureCriterion>& criteria);

struct Partition {
    std::vector<int> parts;  // weakly decreasing
    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string str() const;
};

/// Jordan type of a nilpotent matrix from ranks of its powers.
/// Throws if M is not nilpotent.
Partition jordan_partition(const RatMatrix& m);

/// How an orbit representative is constructed.
struct OrbitRecipe {
    enum Kind { LeviRegular, LeviDistinguished, Diagram, HighestRoot, Explicit } kind = Explicit;
    std::vector<int> levi_nodes;    // 0-indexed simple roots
    std::vector<int> levi_labels;   // for LeviDistinguished: labels on levi_nodes
    std::vector<std::pair<int, Rat>> explicit_f;  // for Explicit: paper-given f
};

struct OrbitRecord {
    std::string algebra;  // "G2", "F4", "E7", "E8"
    std::string label;    // Bala-Carter
    std::vector<int> weighted_dynkin;
    std::size_t dimension = 0;
    std::vector<std::pair<int, Rat>> standard_rep;  // sparse basis coordinates
    std::vector<ClosureCriterion> criteria;
    std::string paper_ref;
    OrbitRecipe recipe;
    bool data_only = false;  // recorded for the poset only; no executable rep

    LieVec rep_vector(const LieAlgebraData& L) const;
};

/// The ~20-orbit catalog the paper touches, generated from recipes and
/// validated (rank(ad rep) = dimension; rep passes its own criteria).
class OrbitCatalog {
public:
    /// Load from the shipped data file; every non-data-only record is
    /// validated against the given algebra cache at first use.
    static OrbitCatalog load(const std::string& path);
    /// Regenerate all records from first principles (recipes in code).
    static OrbitCatalog generate();

    const OrbitRecord* find(const std::string& algebra, const std::string& label) const;
    const std::vector<OrbitRecord>& records() const { return records_; }
    std::vector<std::string> labels(const std::string& algebra) const;

    void save(const std::string& path) const;
    /// Validate one record's invariants against its algebra; throws on failure.
    static void validate(const OrbitRecord& rec, const LieAlgebraData& L,
                         const ActionContext& ctx);

private:
    std::vector<OrbitRecord> records_;
};

/// Standard triple for a record (regular-in-Levi or from the weighted
/// diagram for distinguished orbits); h lies in the Cartan.
Sl2Triple standard_triple(const LieAlgebraData& L, const OrbitRecord& rec);

/// e = sum of simple-root vectors of the Levi; h solves alpha_j(h) = 2 on it.
Sl2Triple levi_regular_triple(const LieAlgebraData& L, const std::vector<int>& nodes);

/// Deterministic generic element of g(2) for an even orbit's diagram,
/// completed to a triple; verifies rank(ad e) = expected_dim.
Sl2Triple triple_from_diagram(const LieAlgebraData& L, const std::vector<int>& labels,
                              std::size_t expected_dim);

}  // namespace slicecert
