#pragma once

#include <stdexcept>
#include <string>

namespace rookpart {

struct OverlapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidRgf : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TrivialInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnitRookError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BoardTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct VariableCountMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by extend(); carries the violating zero-row/zero-column pair.
struct NotExtendable : std::runtime_error {
    int row;
    int col;
    NotExtendable(int i, int j)
        : std::runtime_error("rook is not extendable: zero row " + std::to_string(i) +
                             " <= zero column " + std::to_string(j)),
          row(i), col(j) {}
};

// Text input that fails to parse; position is a 0-based byte offset.
struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace rookpart
