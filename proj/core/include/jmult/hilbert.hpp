#ifndef JMULT_HILBERT_HPP
#define JMULT_HILBERT_HPP

#include <vector>

#include "jmult/hilbert_series.hpp"
#include "jmult/ideal.hpp"

namespace jmult {

/// Dimension, degree (length in dimension 0) and series numerator of
/// ambient/(I + relations), read off the degrevlex leading-term ideal.
HilbertData hilbert_data(const IdealHandle& I);

/// Hilbert function by direct standard-monomial enumeration up to the
/// given degree; independent of the series recursion.
std::vector<long long> hilbert_function_bruteforce(const IdealHandle& I, int up_to_degree);

/// Hilbert-Samuel multiplicity e_I(R) of an m-primary ideal I in R,
/// extracted from lengths of R/I^n by dim(R)-fold finite differencing.
/// Throws InputError when I is not m-primary in R; throws when the
/// differences have not stabilized by n_max (ask for a larger n_max).
long long hilbert_samuel_bruteforce(const IdealHandle& I, const QuotientRing& R, int n_max);

} // namespace jmult

#endif
