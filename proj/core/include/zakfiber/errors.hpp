#pragma once

#include <stdexcept>
#include <string>

namespace zakfiber {

/// Malformed input: bad JSON, out-of-range constructor parameters,
/// mismatched sizes. The CLI maps this to exit code 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical contract was violated on otherwise well-formed data:
/// nonabelian group where an abelian one is required, non-unitary
/// generator images, weight normalization broken, and so on.
/// The CLI maps this to exit code 3.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zakfiber
