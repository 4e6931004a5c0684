#pragma once

#include <stdexcept>
#include <string>

namespace rislink {

// Base class for everything this library throws on purpose.  Callers that
// want blanket handling catch this; callers that care distinguish the
// subclasses below.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter is outside its documented domain.  The message names the
// offending parameter and the constraint it violates.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The aiming-angle equation changed sign nowhere inside the search bracket.
// Not reachable for in-domain geometry; guards against numerical pathology.
class NoRootInBracket : public Error {
public:
    using Error::Error;
};

// Footprint construction produced a non-finite or non-positive axis.
class DegenerateFootprint : public Error {
public:
    using Error::Error;
};

// A sector endpoint is not on the ellipse it was claimed to lie on.
class PointNotOnEllipse : public Error {
public:
    using Error::Error;
};

// The beam footprint illuminates zero elements; downstream statistics are
// undefined (outage is certain).
class ZeroIlluminated : public Error {
public:
    using Error::Error;
};

// A Monte Carlo estimate saw too few events for its confidence interval to
// mean anything.
class InsufficientEvents : public Error {
public:
    using Error::Error;
};

// A simulated fading trace crossed the requested level too few times.
class InsufficientCrossings : public Error {
public:
    using Error::Error;
};

// A boundary scan found no point satisfying the requested duration target.
// The message carries the best value seen so the caller can report how far
// off the target was.
class EmptyRegion : public Error {
public:
    using Error::Error;
};

// Config file rejected; message carries the line number and the reason.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace rislink
