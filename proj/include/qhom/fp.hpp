#pragma once

#include <cstdint>
#include "qhom/errors.hpp"

namespace qhom {

// Arithmetic in the prime field F_p. p is kept below 2^31 so that products of
// two reduced residues fit in uint64 without overflow. All residues are stored
// reduced to [0, p).
class Fp {
  public:
    Fp() : p_(0) {}
    explicit Fp(std::uint64_t p) : p_(p) {
        if (p < 2 || p > 0x7fffffffULL)
            throw InputError("prime must satisfy 2 <= p < 2^31");
        if (!is_prime(p))
            throw InputError("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t p() const { return p_; }
    bool operator==(const Fp& o) const { return p_ == o.p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0)
            throw InvariantError("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0)
            t += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(t);
    }

    // Reduce an arbitrary signed integer into [0, p).
    std::uint64_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0)
            m += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(m);
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

  private:
    std::uint64_t p_;
};

constexpr std::uint64_t kDefaultPrime = 1000003;

}  // namespace qhom
