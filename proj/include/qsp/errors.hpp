#pragma once

#include <stdexcept>
#include <string>

namespace qsp {

// Input validation failures raised at matrix ingest.
struct ZeroMatrixError : std::invalid_argument {
    explicit ZeroMatrixError(const std::string& what) : std::invalid_argument(what) {}
};

struct NonFiniteError : std::invalid_argument {
    explicit NonFiniteError(const std::string& what) : std::invalid_argument(what) {}
};

struct OutOfRangeError : std::out_of_range {
    explicit OutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

// A value does not fit the configured fixed-point word.
struct OverflowError : std::overflow_error {
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Memory-tree switches were not all idle when a new routing pass started.
struct DirtyTreeError : std::logic_error {
    explicit DirtyTreeError(const std::string& what) : std::logic_error(what) {}
};

// A bus or uncompute call does not match the currently routed paths.
struct PathMismatchError : std::logic_error {
    explicit PathMismatchError(const std::string& what) : std::logic_error(what) {}
};

struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// The address register changed between a retrieval and its paired uncompute.
struct StaleAddressError : std::logic_error {
    explicit StaleAddressError(const std::string& what) : std::logic_error(what) {}
};

struct ZeroAngleError : std::domain_error {
    explicit ZeroAngleError(const std::string& what) : std::domain_error(what) {}
};

struct NegativeDecodeError : std::domain_error {
    explicit NegativeDecodeError(const std::string& what) : std::domain_error(what) {}
};

// Working registers were not in a uniform basis state at the end of a run.
struct DisentanglementError : std::runtime_error {
    explicit DisentanglementError(const std::string& what) : std::runtime_error(what) {}
};

struct DimMismatchError : std::invalid_argument {
    explicit DimMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsp
