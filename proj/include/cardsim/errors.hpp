#pragma once

#include <stdexcept>
#include <string>

namespace cardsim {

/// Geometry that violates its construction invariants.
class InvalidGeometryError : public std::invalid_argument {
public:
    explicit InvalidGeometryError(const std::string& what) : std::invalid_argument(what) {}
};

/// Physical state that cannot exist on the given card (e.g. more cuts than windings).
class InvalidStateError : public std::invalid_argument {
public:
    explicit InvalidStateError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested analysis is undefined for the circuit topology (e.g. closed-form
/// resonance of a shunted loop).
class UnsupportedTopologyError : public std::invalid_argument {
public:
    explicit UnsupportedTopologyError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed APDU byte string.
class ApduParseError : public std::runtime_error {
public:
    explicit ApduParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file rejected; message carries step index / field context.
class ScenarioParseError : public std::runtime_error {
public:
    explicit ScenarioParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Catch-all for model parameter validation (negative inductance etc.).
class ModelError : public std::invalid_argument {
public:
    explicit ModelError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cardsim
