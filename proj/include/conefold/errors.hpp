#pragma once

#include <stdexcept>
#include <string>

namespace conefold {

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InconsistentParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct InvalidLocator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegralLattice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyRegion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GluingMismatch : std::logic_error {
    using std::logic_error::logic_error;
};
struct NonPolyhedral : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Raised where a construction is out of this library's realization scope.
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace conefold
