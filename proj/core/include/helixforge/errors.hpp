#pragma once

#include <stdexcept>
#include <string>

namespace helixforge {

// Base class for all domain errors raised by this library. Environment
// failures (IoFailure) and bad job parameters share it so callers can
// catch everything helixforge-specific in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unusable (radius, tolerance) pair: tolerance <= 0, tolerance >= radius,
// or radius <= 0.
class InvalidTolerance : public Error {
public:
    using Error::Error;
};

// Polygon point count below 3.
class InvalidCount : public Error {
public:
    using Error::Error;
};

// Cutter radius meets or exceeds the bore radius, leaving no path radius.
class CutterTooLarge : public Error {
public:
    using Error::Error;
};

// The bore length does not cover a single full revolution at this pitch.
class ZeroRevolutions : public Error {
public:
    using Error::Error;
};

// A program was requested for an empty point sequence.
class EmptyToolpath : public Error {
public:
    using Error::Error;
};

// Two consecutive toolpath points coincide; the chord between them is
// undefined.
class DegenerateSegment : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure while writing output. Signals environment,
// not logic.
class IoFailure : public Error {
public:
    using Error::Error;
};

} // namespace helixforge
