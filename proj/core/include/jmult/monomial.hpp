#ifndef JMULT_MONOMIAL_HPP
#define JMULT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace jmult {

inline constexpr int kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 1u << 14;

/// Exponent vector with cached total degree. The number of variables is
/// fixed by the ambient ring (at most kMaxVars); exponents are bounded by
/// kMaxExponent and any arithmetic that would exceed the bound throws.
class Monomial {
public:
    explicit Monomial(int nvars) : nvars_(static_cast<std::uint16_t>(nvars)), degree_(0) {
        if (nvars < 0 || nvars > kMaxVars)
            throw std::invalid_argument("variable count out of range");
        exp_.fill(0);
    }

    int nvars() const { return nvars_; }
    std::uint32_t degree() const { return degree_; }
    std::uint16_t operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
    bool is_one() const { return degree_ == 0; }

    void set_exponent(int i, std::uint32_t e) {
        if (e >= kMaxExponent) throw std::overflow_error("monomial exponent overflow");
        degree_ += e - exp_[static_cast<std::size_t>(i)];
        exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
    }

    Monomial times(const Monomial& o) const {
        Monomial r(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            std::uint32_t e = static_cast<std::uint32_t>(exp_[i]) + o.exp_[i];
            if (e >= kMaxExponent) throw std::overflow_error("monomial exponent overflow");
            r.exp_[i] = static_cast<std::uint16_t>(e);
        }
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (degree_ > o.degree_) return false;
        for (int i = 0; i < nvars_; ++i)
            if (exp_[i] > o.exp_[i]) return false;
        return true;
    }

    /// Exact quotient o.divide(u): this / u, requires u | this.
    Monomial divide(const Monomial& u) const {
        Monomial r(nvars_);
        for (int i = 0; i < nvars_; ++i)
            r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - u.exp_[i]);
        r.degree_ = degree_ - u.degree_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars_);
        std::uint32_t d = 0;
        for (int i = 0; i < a.nvars_; ++i) {
            r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.degree_ = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < nvars_; ++i)
            if (exp_[i] && o.exp_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_) return false;
        for (int i = 0; i < nvars_; ++i)
            if (exp_[i] != o.exp_[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = degree_;
        for (int i = 0; i < nvars_; ++i) h = h * 1099511628211ull + exp_[i];
        return h;
    }

private:
    std::array<std::uint16_t, kMaxVars> exp_;
    std::uint16_t nvars_;
    std::uint32_t degree_;
};

enum class OrderKind { degrevlex, lex, elim_block };

/// Total multiplicative well-ordering on monomials of one ring.
/// elim_block(k) compares the first k variables by degrevlex and breaks
/// ties with degrevlex on the remaining variables, so a Groebner basis in
/// this order eliminates the first k variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    int block = 0;

    static MonomialOrder degrevlex() { return {OrderKind::degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elim(int k) { return {OrderKind::elim_block, k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    /// +1 if u > v, -1 if u < v, 0 if equal.
    int compare(const Monomial& u, const Monomial& v) const {
        if (u.nvars() != v.nvars())
            throw std::invalid_argument("monomial arity mismatch");
        switch (kind) {
        case OrderKind::lex:
            for (int i = 0; i < u.nvars(); ++i)
                if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
            return 0;
        case OrderKind::degrevlex:
            return revlex_range(u, v, 0, u.nvars());
        case OrderKind::elim_block: {
            int c = revlex_range(u, v, 0, block);
            return c ? c : revlex_range(u, v, block, u.nvars());
        }
        }
        return 0;
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

private:
    static int revlex_range(const Monomial& u, const Monomial& v, int lo, int hi) {
        long long du = 0, dv = 0;
        for (int i = lo; i < hi; ++i) { du += u[i]; dv += v[i]; }
        if (du != dv) return du > dv ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i)
            if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
        return 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace jmult

#endif
