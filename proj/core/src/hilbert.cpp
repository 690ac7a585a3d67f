#include "jmult/hilbert.hpp"

#include "jmult/errors.hpp"

namespace jmult {

HilbertData hilbert_data(const IdealHandle& I) { return I.hilbert(); }

std::vector<long long> hilbert_function_bruteforce(const IdealHandle& I, int up_to_degree) {
    if (up_to_degree < 0) throw InputError("up_to_degree must be nonnegative");
    return standard_monomial_counts(I.basis().leading_monomials(),
                                    I.ring().ambient()->nvars(), up_to_degree);
}

long long hilbert_samuel_bruteforce(const IdealHandle& I, const QuotientRing& R, int n_max) {
    if (!I.ring().same_ring(R)) throw InputError("ideal does not live in the given ring");
    if (R.is_zero_ring()) throw InputError("zero ring");
    int d = R.dimension();
    if (n_max < d + 2) throw InputError("n_max must be at least dim R + 2");
    if (I.hilbert().dimension != 0)
        throw InputError("ideal is not m-primary: dim R/(I + relations) is not 0");

    // lengths of R/I^n, n = 1..n_max; power generators are indexed by
    // multisets (track the last factor to avoid duplicates)
    std::vector<long long> lengths;
    const auto& gens = I.generators();
    std::vector<std::pair<Polynomial, std::size_t>> power;
    for (std::size_t j = 0; j < gens.size(); ++j) power.push_back({gens[j], j});
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Polynomial> plain;
        plain.reserve(power.size());
        for (const auto& [p, last] : power) plain.push_back(p);
        IdealHandle h(R, std::move(plain));
        const HilbertData& hd = h.hilbert();
        lengths.push_back(hd.is_zero_ring ? 0 : hd.degree);
        if (n == n_max) break;
        std::vector<std::pair<Polynomial, std::size_t>> next;
        for (const auto& [p, last] : power)
            for (std::size_t k = last; k < gens.size(); ++k) next.push_back({p * gens[k], k});
        power = std::move(next);
    }

    std::vector<long long> diff = lengths;
    for (int k = 0; k < d; ++k) {
        std::vector<long long> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        diff = std::move(next);
    }
    std::size_t m = diff.size();
    if (m < 3 || diff[m - 1] != diff[m - 2] || diff[m - 2] != diff[m - 3])
        throw InputError("Hilbert-Samuel differences not yet stable; increase n_max");
    return diff[m - 1];
}

} // namespace jmult
