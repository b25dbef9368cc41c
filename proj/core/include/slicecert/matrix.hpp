#pragma once

#include "slicecert/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace slicecert {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Dense matrix over the rationals.  All eliminations are fraction-free
/// (Bareiss) on integer-cleared rows, so results are exact and deterministic.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& c) const;
    RatMatrix transpose() const;
    RatMatrix pow(unsigned k) const;
    RatVec apply(const RatVec& x) const;  // M x
    Rat trace() const;

    std::size_t rank() const;
    /// Basis of the right kernel in reduced row-echelon normal form: each
    /// vector's leading coordinate is 1, leading positions strictly increase,
    /// and each leading column is zero in the other vectors.  The basis is
    /// the unique one with these properties, so callers may compare bases
    /// directly.
    std::vector<RatVec> kernel_basis() const;

    /// One solution of M x = b with the RREF free variables set to zero,
    /// or nullopt when inconsistent.
    std::optional<RatVec> solve(const RatVec& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Sparse integer matrix, column-major.  Used for adjoint/module action
/// matrices where columnwise nilpotency iteration must not materialize
/// dense powers.
struct SparseIntMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Int>>> col;

    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c), col(c) {}

    void add(int i, int j, const Int& v);
    std::size_t nnz() const;
    void matvec(const IntVec& x, IntVec& out) const;  // out = M x
    RatMatrix dense() const;
    /// True iff M^power annihilates every basis vector (computed column by
    /// column; the full matrix power is never formed).
    bool power_annihilates(unsigned power) const;
    /// M^power as a sparse matrix, built columnwise.
    SparseIntMat power_columns(unsigned power) const;
    std::size_t rank() const;
};

/// Exact rank of an integer matrix given by rows; destroys its argument.
std::size_t rank_int_rows(std::vector<IntVec>& rows, std::size_t cols);

/// RREF-normalize a list of rational vectors (rows); returns the unique
/// reduced row-echelon basis of their span.
std::vector<RatVec> rref_normalize(std::vector<RatVec> rows);

/// Deterministic splitmix64 stream; identical across platforms.  All sampled
/// certificates record the seed that produced them.
class SmallRng {
public:
    explicit SmallRng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);
    /// Integer in [lo, hi] inclusive.
    long range(long lo, long hi);
    /// Small rational with numerator in [-9, 9] and denominator in {1,2,3}.
    Rat small_rat();
    /// Nonzero integer in [-bound, bound].
    long nonzero(long bound);

private:
    std::uint64_t s_;
};

}  // namespace slicecert
