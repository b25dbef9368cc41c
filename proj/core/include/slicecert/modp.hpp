#pragma once

#include "slicecert/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace slicecert {

/// Arithmetic mod a word-size prime (values kept reduced in [0, p)).
struct Fp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t from_int(const Int& v) const;
    std::uint64_t from_rat(const Rat& v) const;
};

/// Primes just below 2^62, fixed so runs are reproducible.
extern const std::uint64_t kPrimes62[8];

/// In-place reduced row echelon form mod p.  Returns pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<std::uint64_t>>& a,
                                    std::size_t cols, const Fp& f);

/// Kernel basis mod p in RREF normal form (rows of the returned matrix).
std::vector<std::vector<std::uint64_t>> kernel_mod_p(
    std::vector<std::vector<std::uint64_t>> a, std::size_t cols, const Fp& f);

/// Rational reconstruction of r mod m with |num|, den <= sqrt(m/2);
/// nullopt if none exists.
std::optional<Rat> rational_reconstruct(const Int& r, const Int& m);

/// CRT-combine residues (one per prime) to a residue mod the product.
Int crt_combine(const std::vector<std::uint64_t>& residues,
                const std::vector<std::uint64_t>& primes);

}  // namespace slicecert
