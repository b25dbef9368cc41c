#pragma once

#include "slicecert/matrix.hpp"
#include "slicecert/poly.hpp"
#include "slicecert/rootsystem.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slicecert {

/// Element of a Lie algebra (or module) as exact coordinates in a fixed basis.
using LieVec = RatVec;

/// Chevalley basis with integer structure constants.
///
/// Basis order: f-vectors for negative roots in reverse root order, then the
/// simple coroots h_1..h_r, then e-vectors in root order.  Signs follow the
/// extraspecial-pair convention (positive sign on every extraspecial pair,
/// pairs keyed to the deterministic height-then-lex root order); the
/// convention_hash digests these parameters and is embedded in cache files
/// and certificates.
class LieAlgebraData {
public:
    RootSystem rs;
    std::string convention_hash;

    int dim() const { return rs.dim_algebra(); }
    int npos() const { return rs.n_pos(); }

    int f_index(int pos_idx) const { return npos() - 1 - pos_idx; }
    int h_index(int i) const { return npos() + i; }  // i in [0, rank)
    int e_index(int pos_idx) const { return npos() + rs.rank + pos_idx; }

    /// Basis tag for printing: "e[coords]", "h_i", "f[coords]".
    std::string basis_name(int idx) const;

    /// Structure constants N_{alpha,beta} for positive pairs with
    /// alpha + beta a (positive) root; key = (pos index, pos index).
    const std::map<std::pair<int, int>, int>& n_table() const { return n_; }
    int n_const(int a, int b) const;  // N over positive-root indices

    /// Sparse bracket of two basis vectors (list of (basis index, coeff)).
    using SparseVec = std::vector<std::pair<int, int>>;
    const SparseVec& table(int i, int j) const { return table_[i * dim() + j]; }

    LieVec bracket(const LieVec& x, const LieVec& y) const;
    RatMatrix ad_matrix(const LieVec& x) const;
    /// Adjoint as sparse-integer matrix; x is scaled to integer coordinates
    /// first and the scale returned (nilpotency/rank checks are invariant).
    SparseIntMat ad_sparse_scaled(const LieVec& x, Rat* scale = nullptr) const;

    Rat killing(const LieVec& x, const LieVec& y) const;
    RatMatrix killing_gram() const;

    LieVec zero() const { return LieVec(dim()); }
    LieVec basis_vector(int idx) const;
    LieVec e_alpha(const RootVec& root) const;   // also accepts negatives
    LieVec coroot(const RootVec& root) const;    // h_alpha in the Cartan
    LieVec cartan_from_coroot_coords(const RatVec& c) const;

    /// <alpha, h> for h in the Cartan given by its coroot coordinates.
    Rat root_eval_on_cartan(const RootVec& alpha, const LieVec& h) const;

    /// Apply the sign character eps (one sign per simple root, extended
    /// multiplicatively over the root lattice) to a vector.
    LieVec apply_sign_character(const LieVec& x, const std::vector<int>& eps) const;

    void build_tables();  // invoked by build_chevalley / cache load

private:
    std::map<std::pair<int, int>, int> n_;
    std::vector<SparseVec> table_;
    friend LieAlgebraData build_chevalley(const RootSystem& rs);
    friend std::optional<LieAlgebraData> load_chevalley_cache(const std::string& path,
                                                              const std::string& expect_hash);
};

LieAlgebraData build_chevalley(const RootSystem& rs);
LieAlgebraData build_chevalley(char type_letter, int rank);

std::string convention_hash_for(const RootSystem& rs);

/// Structure-constant cache: versioned portable text, one bracket per line.
void save_chevalley_cache(const LieAlgebraData& L, const std::string& path);
std::optional<LieAlgebraData> load_chevalley_cache(const std::string& path,
                                                   const std::string& expect_hash);

/// Linear map between algebras/modules; column k = image of source basis k.
struct LieMap {
    RatMatrix matrix;  // target_dim x source_dim
    LieVec apply(const LieVec& x) const { return matrix.apply(x); }
};

/// Does phi preserve brackets on every basis pair (exact, exhaustive)?
bool is_homomorphism(const LieAlgebraData& src, const LieAlgebraData& tgt, const LieMap& phi);

/// Extend simple-root images to the whole algebra along the extraspecial
/// recursion; throws if a required bracket degenerates.
LieMap extend_hom(const LieAlgebraData& src, const LieAlgebraData& tgt,
                  const std::vector<LieVec>& e_images, const std::vector<LieVec>& f_images);

/// Automorphism from a Dynkin-diagram symmetry plus a rational rescaling of
/// the (permuted) simple root vectors: e_{alpha_i} -> twist_i e_{perm(i)}.
/// Verified to preserve brackets; throws otherwise.
LieMap diagram_automorphism(const LieAlgebraData& L, const std::vector<int>& node_perm,
                            const std::vector<Rat>& twist);

/// Common fixed space of the given verified automorphisms, closed under
/// bracket (basis vectors are RREF-normalized coordinates in L).
std::vector<LieVec> fixed_subalgebra_basis(const LieAlgebraData& L,
                                           const std::vector<LieMap>& autos);

/// One simple ideal of a reductive subalgebra, identified with an abstract
/// type via its root decomposition relative to a given torus.
struct IdentifiedComponent {
    LieAlgebraData algebra;  // abstract copy, standard Chevalley basis
    LieMap embedding;        // abstract basis -> coordinates in the big algebra
};

/// Decompose the span of `basis` (a semisimple subalgebra of L whose
/// intersection with L's Cartan is a Cartan subalgebra of it) into simple
/// ideals and identify each with a built Chevalley algebra.
std::vector<IdentifiedComponent> identify_semisimple(const LieAlgebraData& L,
                                                     const std::vector<LieVec>& basis);

/// Lie algebra representation: one action matrix per basis element of the
/// (abstract) acting algebra.
struct ModuleAction {
    int dimension = 0;
    std::vector<RatMatrix> action;  // indexed by acting-algebra basis
    /// Basis of the module inside the ambient big algebra (columns).
    RatMatrix ambient_basis;

    RatMatrix act(const LieVec& x) const;
    SparseIntMat act_sparse_scaled(const LieVec& x, Rat* scale = nullptr) const;
    /// rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on all basis pairs.
    bool representation_identity(const LieAlgebraData& algebra) const;
};

/// Restrict the adjoint action of an embedded subalgebra to a joint
/// eigenspace of the given diagonalizable maps (eigenvalue per map).
/// Throws if the eigenspace is not stable under the subalgebra.
ModuleAction isotypic_module(const LieAlgebraData& big, const LieAlgebraData& sub,
                             const LieMap& embedding, const std::vector<LieMap>& operators,
                             const std::vector<Rat>& eigenvalues);

/// Jacobi identity on `count` deterministic random basis triples.
bool jacobi_spot_check(const LieAlgebraData& L, std::uint64_t seed, int count);

}  // namespace slicecert
