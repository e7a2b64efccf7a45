#ifndef PYTERNARY_ERRORS_HPP
#define PYTERNARY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pyternary {

// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator/relation degree lists that cannot be paired (length mismatch or
// q_i + p_i != socle + 3).
struct MalformedDegrees : Error {
    using Error::Error;
};

// A computed Hilbert function violating symmetry, nonnegativity or the
// boundary values T_0 = T_n = 1.  Signals an internal inconsistency, never
// expected for data coming out of the partition enumeration.
struct NonGorensteinData : Error {
    using Error::Error;
};

// Ehrhart interpolation failed its consistency check at extra nodes.
struct InterpolationMismatch : Error {
    using Error::Error;
};

// Stacked polytope construction with no generator of degree < d.
struct NoLowDegreeGenerators : Error {
    using Error::Error;
};

// Random Pfaffian draws kept failing Hilbert function validation.
struct DegenerateInstance : Error {
    using Error::Error;
};

// Input forms to a kernel computation were linearly dependent.
struct DependentInput : Error {
    using Error::Error;
};

// The three linear forms handed to the complete-intersection witness do not
// form a basis of the linear forms.
struct DependentBasis : Error {
    using Error::Error;
};

// Length reduction was handed the zero witness.
struct ZeroWitness : Error {
    using Error::Error;
};

// Unrecognized report format.
struct UnknownFormat : Error {
    using Error::Error;
};

// Degree outside the configured resource guard.
struct ResourceLimit : Error {
    using Error::Error;
};

} // namespace pyternary

#endif
