#pragma once

#include "slicecert/matrix.hpp"
#include "slicecert/nilorbit.hpp"

#include <string>
#include <vector>

namespace slicecert {

/// Classical Lie algebra preserving a fixed nondegenerate bilinear form B:
/// so(B) for symmetric B, sp(B) for antisymmetric B.  Forms are assembled
/// split (hyperbolic), so nilpotent orbits have rational points.
struct FormAlgebra {
    char type = 'B';  // 'B'-symmetric -> so, 'C'-antisymmetric -> sp
    RatMatrix form;
    std::vector<RatMatrix> basis;  // basis of the Lie algebra

    int n() const { return static_cast<int>(form.rows()); }
    std::size_t dim() const { return basis.size(); }
    bool contains(const RatMatrix& x) const;
    /// Random algebra element with small rational coordinates.
    RatMatrix sample(SmallRng& rng) const;
    /// Cayley transform (I - A)(I + A)^{-1} of a sampled algebra element;
    /// lands in the isometry group of B.
    RatMatrix sample_group(SmallRng& rng) const;
    /// dim of the adjoint-group orbit of x (= dim algebra - dim centralizer).
    std::size_t orbit_dim(const RatMatrix& x) const;
};

FormAlgebra make_so_split(int n);   // antidiagonal symmetric form
FormAlgebra make_sp_split(int n);   // n even; antidiagonal symplectic form
FormAlgebra make_algebra(char type, const RatMatrix& form);

/// Nilpotent matrix with the given Jordan partition inside so/sp of a
/// suitable split form, with its sl2-triple.  Validity: for sp, odd parts
/// have even multiplicity; for so, even parts do.  Returns the triple and
/// the form it preserves.
struct MatrixTriple {
    RatMatrix e, h, f;
    RatMatrix form;
    char type;
};
MatrixTriple partition_triple(char type, const std::vector<int>& parts);

/// Jordan partition of a nilpotent matrix (convenience wrapper).
Partition matrix_partition(const RatMatrix& m);

/// The classical special-piece surgery from the Main Theorem's proof:
/// replace [s^{m(s)}] in nu by [s+1, s^{m(s)-2}, s-1], at parts where a
/// symplectic centralizer factor sits.  Returns lambda, or empty when nu
/// has no replaceable part (nu already special).
std::vector<int> special_piece_partner(char type, const std::vector<int>& nu);

struct ClassicalCaseResult {
    std::vector<int> nu, lambda;
    Partition observed;        // Jordan type of f + e0
    bool height2 = false;      // (ad e0)^3 = 0 in the ambient algebra
    bool matches = false;      // observed == lambda
    std::size_t codim = 0;     // codim of the nu-orbit in the lambda-closure
    std::vector<int> factor_ks;  // k_i = codim/2 per symplectic factor
};

/// Build e in the nu-orbit, e0 = sum of minimal nilpotents of the
/// symplectic factors of its reductive centralizer, and certify that
/// f + e0 has Jordan type lambda and e0 has height 2.
ClassicalCaseResult classical_main_theorem_check(char type, const std::vector<int>& nu);

}  // namespace slicecert
