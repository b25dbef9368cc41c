#pragma once

#include "slicecert/certificate.hpp"
#include "slicecert/chevalley.hpp"
#include "slicecert/classicalcase.hpp"
#include "slicecert/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slicecert {

struct RunOpts {
    std::uint64_t seed = 20240801;
    unsigned samples = 25;
};

/// One finite-quotient parametrization case: symbolic factorization
/// identities plus sampled image-closure criteria.
struct QuotientCase {
    std::string label;
    std::string group;    // finite group descriptor
    std::string source;   // source variety descriptor
    std::string paper_ref;
    std::size_t expected_dim = 0;
    std::function<void(Certificate&, const RunOpts&)> factorization;
    std::function<void(Certificate&, const RunOpts&)> image_closure;
};

const std::vector<QuotientCase>& case_catalog();
const QuotientCase* find_case(const std::string& label);

Certificate verify_factorization(const QuotientCase& c, const RunOpts& opts = {});
Certificate verify_image_closure(const QuotientCase& c, const RunOpts& opts = {});

/// --- d4 / S4 machinery (cases d4-gamma4, d4-s4; reused by slicecatalog) ---

/// The morphisms of Lemma OminGamma4quot and Thm. d4S4lem as polynomial maps
/// on SL3 unipotent word parameters and (l1, l2) with l3 = -l1-l2.
struct D4S4Maps {
    RingPtr domain;  // t1..t6 (word), l1, l2
    // psi components: A in sl3 (traceless 3x3, 8 coords), C in S2V (6), D in S2V* (6)
    std::vector<Poly> A, C, D;
    // Upsilon adds the central z = (l1, l2) and per-index C_i, D_i blocks.
    std::vector<Poly> z;
    std::vector<std::vector<Poly>> Ci, Di;
    Poly sum_l_sq, prod_l;  // sum l_i^2 and l1 l2 l3 on the domain

    PolynomialMap psi() const;      // 20 components
    PolynomialMap upsilon() const;  // 46 components
};
const D4S4Maps& d4s4_maps();

/// The four "depends algebraically" identities behind Thm. d4S4lem,
/// verified as exact polynomial identities in (l1, l2, l3), sum = 0.
bool tlem1_identity(std::string* witness = nullptr);
bool tlem2_identity(std::string* witness = nullptr);
bool tlem3_identity(std::string* witness = nullptr);
bool tlem4_identity(std::string* witness = nullptr);
/// tau(sigma(x)) is a fixed multiple of x on S2V (the paper normalizes to 3).
bool sigma_tau_normalization(std::string* witness = nullptr);

/// --- G2 / 7-dimensional module model (case d4xd4-s3; reused by slicecatalog) ---

struct G2Model {
    LieAlgebraData g2;          // abstract G2
    ModuleAction seven;         // the 7-dimensional module over Q
    LieVec e_subreg;            // e_{alpha2} + e_{3 alpha1 + alpha2}
    RatVec v1, v2;              // highest weight vector and its partner
    // ad-nilpotent generators of G2 used for word sampling (all root vectors)
    std::vector<LieVec> word_gens;
};
const G2Model& g2_model();

/// Sampled pair (Ad(g) x0 in the adjoint, rho(g) on the module) for a word
/// with exponents drawn from rng.
struct G2Sample {
    RatMatrix adjoint_conj;  // dim 14 change of basis Ad(g)
    RatMatrix module_conj;   // dim 7
};
G2Sample g2_sample(SmallRng& rng, int word_len = 8);

/// --- a2 / S4 machinery (case a2-s4; reused by slicecatalog) ---

struct A2S4Data {
    RingPtr xy_ring;   // x1,x2,x3,y1,y2,y3
    RingPtr gen_ring;  // f0,f1,f2,g0,g1,g2,h1,h2
    std::vector<Poly> gens;         // generators in xy_ring
    std::vector<int> degrees;       // 4,4,4,6,6,6,8,8
    std::vector<int> omega_weight;  // 0,1,2,0,1,2,1,2

    struct Block {
        int degree = 0;
        std::vector<std::vector<int>> columns;  // generator exponent vectors
        std::vector<RatVec> kernel;             // confirmed, RREF rows
    };
    std::vector<Block> blocks;  // degrees with nonzero relation space

    int relation_dim() const;
    std::map<int, int> degree_counts() const;
    /// Membership of a (gen_ring) candidate in the confirmed relation space
    /// modulo the ideal (x.y); exact.
    bool contains(const Poly& candidate) const;
    /// Exact check that a gen_ring polynomial expands to zero on a2.
    bool expands_to_zero(const Poly& candidate) const;

    /// The nine relations printed in the paper.  The eighth as printed is not
    /// omega-homogeneous (its f1^2 h1 term); corrected_r8 replaces it by
    /// f1^2 h2, the mirror of the ninth relation's f2^2 h1 term.
    std::vector<Poly> printed_relations(bool corrected_r8) const;
};
const A2S4Data& a2s4_data();

/// The recorded identification of the paper's f0..h2 with our generators
/// (a substitution on gen_ring), found by a deterministic search; nullopt
/// if none of the candidates matches.
std::optional<std::vector<Poly>> a2s4_paper_identification();

/// Values of the a2/S4 generators at the matrix N_{s,t} as polynomials in
/// (s, t); index order matches a2s4_data().gens.
std::vector<Poly> a2s4_values_at_nst();

}  // namespace slicecert
