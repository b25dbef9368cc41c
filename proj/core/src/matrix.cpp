#include "slicecert/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace slicecert {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix+: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix-: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix*: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatMatrix RatMatrix::pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::pow: not square");
    RatMatrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

RatVec RatMatrix::apply(const RatVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("RatMatrix::apply: shape mismatch");
    RatVec out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rat& y = at(i, j);
            if (!y.is_zero()) out[i] += y * x[j];
        }
    }
    return out;
}

Rat RatMatrix::trace() const {
    Rat t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

namespace {

// Clear denominators row by row, yielding an integer matrix with the same
// row space up to scaling.
std::vector<IntVec> integer_rows(const RatMatrix& m) {
    std::vector<IntVec> rows(m.rows(), IntVec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            if (!x.is_zero()) rows[i][j] = x.num() * (l / x.den());
        }
    }
    return rows;
}

}  // namespace

std::size_t rank_int_rows(std::vector<IntVec>& a, std::size_t cols) {
    const std::size_t m = a.size();
    std::size_t r = 0;
    Int prev(1);
    std::size_t pc = 0;
    while (r < m && pc < cols) {
        // Pivot: smallest nonzero magnitude in column pc below row r.
        std::size_t best = m;
        std::size_t best_bits = ~std::size_t(0);
        for (std::size_t i = r; i < m; ++i) {
            if (sgn(a[i][pc]) == 0) continue;
            std::size_t bits = mpz_sizeinbase(a[i][pc].get_mpz_t(), 2);
            if (bits < best_bits) { best_bits = bits; best = i; }
        }
        if (best == m) { ++pc; continue; }
        std::swap(a[r], a[best]);
        const Int piv = a[r][pc];
        for (std::size_t i = r + 1; i < m; ++i) {
            // Rows with zero lead still get the multiply/exact-divide so
            // entries stay k x k minors of the original matrix.
            const Int lead = a[i][pc];
            for (std::size_t j = pc; j < cols; ++j) {
                Int t = a[i][j] * piv - lead * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        }
        prev = piv;
        ++r;
        ++pc;
    }
    return r;
}

std::size_t RatMatrix::rank() const {
    auto rows = integer_rows(*this);
    return rank_int_rows(rows, cols_);
}

namespace {

// Gauss-Jordan to reduced row echelon form over Q.  Returns pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<RatVec>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t sel = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (!a[i][c].is_zero()) { sel = i; break; }
        if (sel == a.size()) continue;
        std::swap(a[r], a[sel]);
        Rat inv = a[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<RatVec> rref_normalize(std::vector<RatVec> rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    auto pivots = rref_in_place(rows, cols);
    rows.resize(pivots.size());
    return rows;
}

std::vector<RatVec> RatMatrix::kernel_basis() const {
    std::vector<RatVec> a(rows_, RatVec(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    auto pivots = rref_in_place(a, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> ker;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols_);
        v[f] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < f) v[pivots[r]] = -a[r][f];
        ker.push_back(std::move(v));
    }
    // The free-column vectors already form an RREF basis (leading 1 at the
    // free column reading from the right is not standard); normalize to the
    // canonical reduced form so bases compare bit-exactly.
    return rref_normalize(std::move(ker));
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("RatMatrix::solve: shape mismatch");
    std::vector<RatVec> a(rows_, RatVec(cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
        a[i][cols_] = b[i];
    }
    auto pivots = rref_in_place(a, cols_ + 1);
    for (auto c : pivots)
        if (c == cols_) return std::nullopt;  // row (0 ... 0 | 1)
    RatVec x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols_];
    return x;
}

void SparseIntMat::add(int i, int j, const Int& v) {
    if (sgn(v) == 0) return;
    col[j].emplace_back(i, v);
}

std::size_t SparseIntMat::nnz() const {
    std::size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
}

void SparseIntMat::matvec(const IntVec& x, IntVec& out) const {
    out.assign(rows, Int(0));
    for (int j = 0; j < cols; ++j) {
        if (sgn(x[j]) == 0) continue;
        for (const auto& [i, v] : col[j]) out[i] += v * x[j];
    }
}

RatMatrix SparseIntMat::dense() const {
    RatMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) m.at(i, j) = m.at(i, j) + Rat(v);
    return m;
}

bool SparseIntMat::power_annihilates(unsigned power) const {
    IntVec v(cols), w;
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < cols; ++i) v[i] = (i == j) ? 1 : 0;
        bool zero = false;
        for (unsigned k = 0; k < power; ++k) {
            matvec(v, w);
            std::swap(v, w);
            zero = true;
            for (const auto& x : v)
                if (sgn(x) != 0) { zero = false; break; }
            if (zero) break;
        }
        if (!zero) return false;
    }
    return true;
}

SparseIntMat SparseIntMat::power_columns(unsigned power) const {
    SparseIntMat out(rows, cols);
    IntVec v(cols), w;
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < cols; ++i) v[i] = (i == j) ? 1 : 0;
        for (unsigned k = 0; k < power; ++k) {
            matvec(v, w);
            std::swap(v, w);
        }
        for (int i = 0; i < rows; ++i)
            if (sgn(v[i]) != 0) out.col[j].emplace_back(i, v[i]);
    }
    return out;
}

std::size_t SparseIntMat::rank() const {
    std::vector<IntVec> rows_(rows, IntVec(cols));
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) rows_[i][j] += v;
    return rank_int_rows(rows_, cols);
}

std::uint64_t SmallRng::next() {
    s_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SmallRng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SmallRng::below(0)");
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % n;
}

long SmallRng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rat SmallRng::small_rat() {
    long num = range(-9, 9);
    long den = range(1, 3);
    return Rat(num, den);
}

long SmallRng::nonzero(long bound) {
    long v = 0;
    while (v == 0) v = range(-bound, bound);
    return v;
}

}  // namespace slicecert
