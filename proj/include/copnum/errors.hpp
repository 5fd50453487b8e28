#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace copnum {

/// Malformed external input (graph6 lines, hypergraph fixtures, traces).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A state budget, size cap or deadline was hit before the computation finished.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t bound)
        : std::runtime_error(what), bound_(bound) {}

    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t bound_;
};

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace copnum
