#ifndef JMULT_HILBERT_SERIES_HPP
#define JMULT_HILBERT_SERIES_HPP

#include <vector>

#include "jmult/monomial.hpp"

namespace jmult {

/// Hilbert data of a standard-graded quotient, read off the leading-term
/// ideal. `numerator` is N(t) with the Hilbert series N(t)/(1-t)^nvars;
/// `dimension` is the Krull dimension and `degree` the multiplicity e(.)
/// (the length when dimension is 0). The unit ideal yields is_zero_ring.
struct HilbertData {
    std::vector<long long> numerator; // coefficient of t^k at index k
    int dimension = -1;
    long long degree = 0;
    bool is_zero_ring = false;
};

/// Remove generators divisible by another generator (and duplicates).
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);

/// Numerator of the Hilbert series of R/(gens) over (1-t)^nvars, by the
/// pivot-variable recursion with memoization.
std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

/// Dimension/degree analysis of a numerator: factor out (1-t)^k, evaluate
/// the rest at 1.
HilbertData analyze_numerator(std::vector<long long> numerator, int nvars);

HilbertData hilbert_from_leading_terms(const std::vector<Monomial>& lts, int nvars);

/// Count of degree-d standard monomials (not divisible by any generator)
/// for d = 0..up_to, by direct enumeration. Independent of the series
/// recursion.
std::vector<long long> standard_monomial_counts(const std::vector<Monomial>& gens, int nvars,
                                                int up_to);

} // namespace jmult

#endif
