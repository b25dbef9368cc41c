#pragma once

#include "slicecert/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace slicecert {

/// Generators of the S_n-invariants on k copies of h_{n-1} + h_{n-1}^*,
/// realized on tuples of traceless diagonal n x n matrices with the n-th
/// entry eliminated.  For k = 1 these are g_ij(x,y) = tr(x^i y^j),
/// 2 <= i+j <= n; for k > 1 the polarized power sums over all 2k vector
/// variables.
struct InvariantGeneratorSet {
    int n = 0;
    int copies = 1;
    RingPtr coord_ring;  // 2*copies*(n-1) coordinates
    struct Generator {
        std::vector<int> multidegree;  // exponents over the 2k vector variables
        int degree = 0;
        Poly poly;
        std::string symbol;  // "g<multidegree digits>"
    };
    std::vector<Generator> gens;

    /// Exact invariance under the transposition (1 2) and the n-cycle.
    bool invariance_check() const;
};

InvariantGeneratorSet generators_sn(int n, int copies);

/// Graded relation computation: per-degree confirmed kernel bases of the
/// evaluation map, with new-relation counts modulo lower-degree consequences.
///
/// Method: fixed-seed integer points give the evaluation matrix mod two
/// 62-bit primes (its kernel bounds the rational kernel from above); the
/// kernel basis is CRT-lifted and rationally reconstructed, and every basis
/// vector is then confirmed by exact symbolic expansion to zero.  Counts
/// therefore rest on exact certificates: k independent exact relations plus
/// the rank_p <= rank_Q inequality for the integer evaluation matrix.
struct RelationBasis {
    int n = 0, copies = 1, max_degree = 0;
    RingPtr gen_ring;  // formal generator symbols, graded-lex order
    std::vector<int> gen_degrees;
    std::vector<std::vector<int>> gen_multidegrees;

    struct DegreeBlock {
        int degree = 0;
        std::vector<Poly> kernel;         // all confirmed relations (gen_ring)
        std::vector<Poly> new_relations;  // representatives modulo lower * gens
        std::size_t consequence_rank = 0;
    };
    std::vector<DegreeBlock> blocks;

    /// Per-stratum confirmed kernel data, kept for membership tests.
    struct Span {
        int degree = 0;
        std::vector<int> multidegree;
        std::vector<std::vector<int>> columns;  // generator exponent vectors
        std::vector<RatVec> kernel;             // RREF rows over the columns
    };
    std::vector<Span> spans;

    std::uint64_t seed = 0;
    int resamples = 0;

    std::map<int, int> degree_counts() const;  // degree -> # new relations
    int total_new() const;
    const DegreeBlock* block(int degree) const;

    /// Is the (homogeneous) candidate in the span of the confirmed kernel
    /// at its degree?  Exact.
    bool contains(const Poly& candidate_in_gen_ring) const;

    /// Stable text export: legend header, one relation per line.
    void save(const std::string& path) const;
};

RelationBasis relations_up_to_degree(const InvariantGeneratorSet& gens, int max_degree,
                                     std::uint64_t seed = 20240801);

/// Per-degree comparison of computed counts against (1/2) j (j+1) (n-j) at
/// degree n+j+1 and the total against C(n+2, 4).
struct ConjectureReport {
    int n = 0;
    std::map<int, std::pair<int, int>> per_degree;  // degree -> (computed, predicted)
    int total_computed = 0, total_predicted = 0;
    bool match = false;
    std::string str() const;
};

ConjectureReport conjecture_check(int n, const RelationBasis& computed);

/// Predicted counts alone (for tests and reporting).
std::map<int, int> conjecture_counts(int n);
long binomial(int n, int k);

}  // namespace slicecert
