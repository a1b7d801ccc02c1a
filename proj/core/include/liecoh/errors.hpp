#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Violation of an internal mathematical invariant (delta^2 != 0, failed
/// Stasheff identity, ...). These always indicate a bug, never bad input,
/// and are surfaced loudly instead of being swallowed.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Malformed or unusable caller input (bad structure constants, missing
/// weights where a weight grading is required, unparsable rationals, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation that needs a weight grading was handed an unweighted
/// algebra. Weights are never inferred; see StructureConstants::weights.
class unweighted_input_error : public input_error {
public:
    explicit unweighted_input_error(const std::string& what) : input_error(what) {}
};

} // namespace liecoh
