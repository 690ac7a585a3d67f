#include "jmult/hilbert_series.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace jmult {

namespace {

using SeriesPoly = std::vector<long long>;

SeriesPoly poly_one() { return {1}; }

void poly_add(SeriesPoly& a, const SeriesPoly& b, int shift) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift))
        a.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += b[i];
}

// a *= (1 - t^k)
void poly_mul_one_minus(SeriesPoly& a, std::uint32_t k) {
    SeriesPoly r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + k] -= a[i];
    }
    a = std::move(r);
}

void poly_trim(SeriesPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<std::uint16_t> key_of(const std::vector<Monomial>& gens) {
    std::vector<std::uint16_t> key;
    if (gens.empty()) return key;
    int n = gens[0].nvars();
    key.reserve(gens.size() * static_cast<std::size_t>(n));
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) key.push_back(g[i]);
    return key;
}

struct NumeratorContext {
    std::map<std::vector<std::uint16_t>, SeriesPoly> memo;

    SeriesPoly run(std::vector<Monomial> gens) {
        gens = minimal_monomial_generators(std::move(gens));
        if (gens.empty()) return poly_one();
        if (gens[0].is_one()) return {};

        auto key = key_of(gens);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        SeriesPoly result;
        int pi = -1, pj = -1;
        for (std::size_t i = 0; i < gens.size() && pi < 0; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!gens[i].coprime(gens[j])) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) {
            // pairwise coprime: product of (1 - t^deg)
            result = poly_one();
            for (const auto& g : gens) poly_mul_one_minus(result, g.degree());
        } else {
            int var = -1;
            for (int v = 0; v < gens[0].nvars(); ++v)
                if (gens[static_cast<std::size_t>(pi)][v] && gens[static_cast<std::size_t>(pj)][v]) {
                    var = v;
                    break;
                }
            // N(I) = N(I + (x)) + t * N(I : x)
            std::vector<Monomial> plus = gens;
            {
                Monomial x(gens[0].nvars());
                x.set_exponent(var, 1);
                plus.push_back(x);
            }
            std::vector<Monomial> colon;
            colon.reserve(gens.size());
            for (const auto& g : gens) {
                Monomial h = g;
                if (h[var] > 0) h.set_exponent(var, h[var] - 1u);
                colon.push_back(h);
            }
            result = run(std::move(plus));
            poly_add(result, run(std::move(colon)), 1);
        }
        poly_trim(result);
        memo.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (&h != &g && h.divides(g) && (h != g || &h < &g)) {
                redundant = true;
                break;
            }
        if (!redundant && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
    (void)nvars;
    NumeratorContext ctx;
    return ctx.run(gens);
}

HilbertData analyze_numerator(std::vector<long long> numerator, int nvars) {
    HilbertData out;
    poly_trim(numerator);
    if (numerator.empty()) {
        out.is_zero_ring = true;
        out.dimension = -1;
        out.degree = 0;
        out.numerator = {};
        return out;
    }
    out.numerator = numerator;
    // Divide by (1 - t) while exact; the cofactor at t=1 is the degree.
    int k = 0;
    SeriesPoly cur = numerator;
    for (;;) {
        long long at_one = 0;
        for (long long c : cur) at_one += c;
        if (at_one != 0) {
            out.degree = at_one;
            break;
        }
        // synthetic division by (1 - t): q_i = sum_{j<=i} c_j
        SeriesPoly q(cur.size() - 1, 0);
        long long run = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            run += cur[i];
            q[i] = run;
        }
        poly_trim(q);
        cur = std::move(q);
        ++k;
    }
    out.dimension = nvars - k;
    return out;
}

HilbertData hilbert_from_leading_terms(const std::vector<Monomial>& lts, int nvars) {
    return analyze_numerator(hilbert_numerator(lts, nvars), nvars);
}

namespace {

void enumerate(const std::vector<Monomial>& gens, Monomial& m, int var, int remaining,
               long long& count) {
    if (var + 1 == m.nvars()) {
        m.set_exponent(var, static_cast<std::uint32_t>(remaining));
        for (const auto& g : gens)
            if (g.divides(m)) {
                m.set_exponent(var, 0);
                return;
            }
        ++count;
        m.set_exponent(var, 0);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        m.set_exponent(var, static_cast<std::uint32_t>(e));
        enumerate(gens, m, var + 1, remaining - e, count);
    }
    m.set_exponent(var, 0);
}

} // namespace

std::vector<long long> standard_monomial_counts(const std::vector<Monomial>& gens, int nvars,
                                                int up_to) {
    std::vector<Monomial> min = minimal_monomial_generators(gens);
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int d = 0; d <= up_to; ++d) {
        long long count = 0;
        Monomial m(nvars);
        if (nvars == 0) {
            count = d == 0 ? 1 : 0;
            bool unit = false;
            for (const auto& g : min) unit |= g.is_one();
            if (unit) count = 0;
        } else {
            enumerate(min, m, 0, d, count);
        }
        out.push_back(count);
    }
    return out;
}

} // namespace jmult
