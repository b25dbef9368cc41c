#pragma once

#include <map>
#include <string>
#include <vector>

namespace slicecert {

/// Root as an integer coordinate vector over the simple roots.
using RootVec = std::vector<int>;

/// Irreducible root system with Bourbaki simple-root numbering.  Roots are
/// kept in the simple-root basis; inner products go through the symmetrized
/// Cartan matrix so everything stays integral.
struct RootSystem {
    char type_letter = 0;
    int rank = 0;
    /// cartan[i][j] = <alpha_j, alpha_i^vee> (value of coroot i on root j).
    std::vector<std::vector<int>> cartan;
    /// Half squared lengths, short roots = 1 (so 1,1 / 1,2 / 1,3 patterns).
    std::vector<int> d;
    /// Positive roots ordered by height, then lexicographically: the root
    /// order every basis, cache file, and sign convention keys on.
    std::vector<RootVec> positives;

    std::map<RootVec, int> pos_index;

    int n_pos() const { return static_cast<int>(positives.size()); }
    int n_roots() const { return 2 * n_pos(); }
    int dim_algebra() const { return n_roots() + rank; }

    static int height(const RootVec& v);
    /// <v, alpha_i^vee>
    int pair_coroot(const RootVec& v, int i) const;
    /// Symmetric bilinear form (v, w), short roots having norm 2.
    int bilinear(const RootVec& v, const RootVec& w) const;
    int norm2(const RootVec& v) const { return bilinear(v, v); }
    RootVec reflect_simple(int i, const RootVec& v) const;

    bool is_root(const RootVec& v) const;
    /// Index into positives for v or -v; negative roots report is_positive=false.
    struct Lookup { bool found; bool positive; int index; };
    Lookup lookup(const RootVec& v) const;

    RootVec highest_root() const;
    /// Largest p with beta - p*alpha a root (alpha, beta roots).
    int string_down(const RootVec& alpha, const RootVec& beta) const;

    /// Coordinates of v^vee in the simple coroot basis (rational in general,
    /// integral times 1/d; returned as numerator with denominator norm2/2).
    /// For roots this is integral: v^vee = sum m_i * d_i / d_v * alpha_i^vee.
    std::vector<int> coroot_coords(const RootVec& v) const;

    std::string name() const { return std::string(1, type_letter) + std::to_string(rank); }
};

/// Build the system by closing the simple roots under simple reflections.
/// Throws on invalid (type, rank).
RootSystem build_root_system(char type_letter, int rank);

}  // namespace slicecert
