#ifndef JMULT_ZP_HPP
#define JMULT_ZP_HPP

#include <cstdint>
#include <stdexcept>

namespace jmult {

/// Arithmetic in Z/p for a prime p < 2^31. Elements are canonical
/// representatives in [0, p); all products are carried out in 64 bits.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("characteristic must be a prime in [2, 2^31)");
    }

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    /// Canonical representative of an arbitrary signed integer.
    std::uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t p) {
        if (p < 2 || p >= (1u << 31)) return false;
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

} // namespace jmult

#endif
