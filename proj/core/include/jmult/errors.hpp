#ifndef JMULT_ERRORS_HPP
#define JMULT_ERRORS_HPP

#include <stdexcept>

namespace jmult {

/// Malformed input: bad problem files, parse errors, contract violations
/// at the call boundary. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical verdict failed or a run was detected as non-generic
/// (dimension failing to drop, step overflow, seed disagreement). The CLI
/// maps these to exit code 2; messages carry the seed and both sides of
/// the failed identity.
class VerdictFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jmult

#endif
