#pragma once

#include <stdexcept>
#include <utility>

namespace pathrep {

/// Arithmetic in the prime field GF(p). Elements are residues in [0, p);
/// callers are expected to keep values reduced, and every operation here
/// returns a reduced value.
class PrimeField {
public:
    explicit PrimeField(unsigned p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
    }

    unsigned modulus() const { return p_; }

    unsigned reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<unsigned>(r < 0 ? r + static_cast<long long>(p_) : r);
    }

    unsigned add(unsigned a, unsigned b) const { return (a % p_ + b % p_) % p_; }
    unsigned sub(unsigned a, unsigned b) const { return (a % p_ + p_ - b % p_) % p_; }
    unsigned mul(unsigned a, unsigned b) const {
        return static_cast<unsigned>((static_cast<unsigned long long>(a % p_) * (b % p_)) % p_);
    }
    unsigned neg(unsigned a) const {
        a %= p_;
        return a == 0 ? 0 : p_ - a;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    unsigned inv(unsigned a) const {
        a %= p_;
        if (a == 0) throw std::domain_error("PrimeField: zero has no inverse");
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
        while (new_r != 0) {
            const long long q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return static_cast<unsigned>(t < 0 ? t + static_cast<long long>(p_) : t);
    }

    bool operator==(const PrimeField&) const = default;

    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    unsigned p_;
};

}  // namespace pathrep
