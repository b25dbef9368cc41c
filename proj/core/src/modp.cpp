#include "slicecert/modp.hpp"

#include <stdexcept>

namespace slicecert {

const std::uint64_t kPrimes62[8] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL,
};

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Fp::from_int(const Int& v) const {
    Int m = v % Int(p);
    if (m < 0) m += Int(p);
    return m.get_ui();
}

std::uint64_t Fp::from_rat(const Rat& v) const {
    std::uint64_t n = from_int(v.num());
    std::uint64_t d = from_int(v.den());
    if (d == 0) throw std::domain_error("Fp::from_rat: denominator divisible by p");
    return mul(n, inv(d));
}

std::vector<std::size_t> rref_mod_p(std::vector<std::vector<std::uint64_t>>& a,
                                    std::size_t cols, const Fp& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t sel = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (a[i][c] != 0) { sel = i; break; }
        if (sel == a.size()) continue;
        std::swap(a[r], a[sel]);
        std::uint64_t inv = f.inv(a[r][c]);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t m = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> kernel_mod_p(
    std::vector<std::vector<std::uint64_t>> a, std::size_t cols, const Fp& f) {
    auto pivots = rref_mod_p(a, cols, f);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> ker;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < fc) v[pivots[r]] = f.neg(a[r][fc]);
        ker.push_back(std::move(v));
    }
    // Normalize the kernel itself to reduced echelon form so reconstructed
    // rational vectors are canonical across primes.
    auto kp = rref_mod_p(ker, cols, f);
    ker.resize(kp.size());
    return ker;
}

std::optional<Rat> rational_reconstruct(const Int& r0, const Int& m) {
    Int b = r0 % m;
    if (b < 0) b += m;
    // Extended Euclid, stopping when the remainder drops below sqrt(m/2).
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r_prev = m, r_cur = b;
    Int t_prev(0), t_cur(1);
    while (r_cur > bound) {
        if (r_cur == 0) return std::nullopt;
        Int q = r_prev / r_cur;
        Int r_next = r_prev - q * r_cur;
        Int t_next = t_prev - q * t_cur;
        r_prev = r_cur; r_cur = r_next;
        t_prev = t_cur; t_cur = t_next;
    }
    if (t_cur == 0) return std::nullopt;
    Int num = r_cur, den = t_cur;
    if (den < 0) { den = -den; num = -num; }
    if (den > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        // A common factor means the candidate is not a valid reconstruction.
        num /= g;
        den /= g;
    }
    // Verify: num == den * r0 (mod m).
    Int chk = (den * r0 - num) % m;
    if (chk != 0) return std::nullopt;
    return Rat(num, den);
}

Int crt_combine(const std::vector<std::uint64_t>& residues,
                const std::vector<std::uint64_t>& primes) {
    Int x(0), m(1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Int p(primes[i]);
        Int r(residues[i]);
        // x' = x + m * ((r - x) / m mod p)
        Int minv;
        if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("crt_combine: non-coprime moduli");
        Int d = ((r - x) % p) * minv % p;
        if (d < 0) d += p;
        x += m * d;
        m *= p;
    }
    return x;
}

}  // namespace slicecert
