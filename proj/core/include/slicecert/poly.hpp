#pragma once

#include "slicecert/matrix.hpp"
#include "slicecert/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace slicecert {

/// Exponent vector, one byte per variable (length = number of ring
/// variables).  Kept in a std::string so short monomials stay inline.
using Mono = std::string;

struct PolyRing {
    std::vector<std::string> vars;
    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);

/// Monomial order: graded lexicographic in the declared variable order.
/// Terms are stored descending, so normal forms are unique.
bool mono_less_glex(const Mono& a, const Mono& b);

/// Sparse multivariate polynomial with exact rational coefficients.
/// No zero coefficient is ever stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const Rat& c);
    static Poly variable(RingPtr ring, std::size_t index, unsigned power = 1);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<std::pair<Mono, Rat>>& terms() const { return t_; }

    int total_degree() const;  // -1 for the zero polynomial
    /// Degree counting only the listed variables.
    int degree_in(const std::vector<std::size_t>& vars) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& o) const { return t_ == o.t_; }

    /// Product dropping every monomial of weighted degree > cutoff
    /// (weights indexed by variable).
    Poly mul_truncated(const Poly& o, const std::vector<int>& weights, int cutoff) const;
    Poly truncate(const std::vector<int>& weights, int cutoff) const;
    int weighted_degree(const std::vector<int>& weights) const;

    Poly derivative(std::size_t var) const;
    Rat eval(const RatVec& point) const;
    /// Substitute polynomials (over any ring) for this ring's variables.
    Poly substituted(const RingPtr& target, const std::vector<Poly>& images) const;
    Rat coeff(const Mono& m) const;
    /// Coefficient of var^k, as a polynomial in the remaining variables
    /// (same ring, exponent of var forced to zero).
    Poly coeff_of(std::size_t var, unsigned k) const;

    std::string str() const;

    /// Internal: add a term (accumulates, drops zeros, keeps order).
    void add_term(const Mono& m, const Rat& c);

    static Poly from_map(RingPtr ring, std::map<Mono, Rat>&& acc);

private:
    RingPtr ring_;
    std::vector<std::pair<Mono, Rat>> t_;
    void normalize_from(std::vector<std::pair<Mono, Rat>>&& raw);
};

/// Tuple of polynomials on a common domain; the executable form of the
/// paper's parametrizations.
struct PolynomialMap {
    RingPtr domain;
    std::vector<Poly> components;
    std::string label;

    RatVec eval(const RatVec& point) const;
    /// Rank of the Jacobian d(components)/d(domain vars) at the point.
    std::size_t jacobian_rank_at(const RatVec& point) const;
};

}  // namespace slicecert
