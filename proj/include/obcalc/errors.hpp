#pragma once

#include <stdexcept>
#include <string>

namespace obcalc {

// Base for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or schema-violating input (files, descriptions, options).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A description violates a structural invariant (unresolved curve name,
// wrong homology class length, bad page data, ...).
struct ValidationError : ParseError {
    explicit ValidationError(const std::string& msg) : ParseError(msg) {}
};

// An interval emptied during refinement; `rule` names the rule that fired.
struct ContradictionError : Error {
    std::string rule;
    ContradictionError(std::string rule_name, const std::string& msg)
        : Error("contradiction [" + rule_name + "]: " + msg), rule(std::move(rule_name)) {}
};

// A rotation number is needed but absent on the named curve.
struct MissingRotationError : Error {
    std::string curve;
    explicit MissingRotationError(std::string curve_name)
        : Error("missing rotation number on curve '" + curve_name + "'"),
          curve(std::move(curve_name)) {}
};

// The characteristic vector is not in the column space of the intersection
// form, i.e. the first Chern class is not torsion.
struct NonTorsionError : Error {
    explicit NonTorsionError(const std::string& msg) : Error(msg) {}
};

// A signature override was combined with a nonzero characteristic functional.
struct SigmaOverrideError : Error {
    explicit SigmaOverrideError(const std::string& msg) : Error(msg) {}
};

// An operation restricted to a specific page type was called on another page.
struct WrongPageError : Error {
    explicit WrongPageError(const std::string& msg) : Error(msg) {}
};

// Matrix/vector dimensions do not line up, or two bases are not equivalent.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A curve referenced by the word has no homology class attached.
struct MissingH1ClassError : Error {
    std::string curve;
    explicit MissingH1ClassError(std::string curve_name)
        : Error("curve '" + curve_name + "' has no homology class"),
          curve(std::move(curve_name)) {}
};

// Interval arithmetic was asked for on an unbounded interval.
struct UnboundedIntervalError : Error {
    explicit UnboundedIntervalError(const std::string& msg) : Error(msg) {}
};

} // namespace obcalc
