#pragma once

#include <stdexcept>
#include <string>

namespace pairdom {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& reason)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + reason),
          line(line_) {}
};

struct DisconnectedError : std::runtime_error {
    DisconnectedError() : std::runtime_error("graph is not connected") {}
};

struct NotABlockGraph : std::runtime_error {
    int block;  // offending block id, -1 for isolated-vertex failures
    NotABlockGraph(int block_, const std::string& reason)
        : std::runtime_error("not a block graph: " + reason), block(block_) {}
};

struct NotACutVertex : std::runtime_error {
    int vertex;
    explicit NotACutVertex(int v)
        : std::runtime_error("vertex " + std::to_string(v) + " is not a cut vertex"),
          vertex(v) {}
};

struct TooLarge : std::runtime_error {
    TooLarge(int n, int cap)
        : std::runtime_error("graph has " + std::to_string(n) +
                             " vertices, oracle cap is " + std::to_string(cap)) {}
};

struct NoUnmatched : std::runtime_error {
    NoUnmatched() : std::runtime_error("all components have even size") {}
};

// State-machine corruption. The CLI maps this to exit code 2: it signals a
// correctness finding, not bad input.
struct InternalInvariant : std::runtime_error {
    explicit InternalInvariant(const std::string& what)
        : std::runtime_error("internal invariant violated: " + what) {}
};

inline void check_invariant(bool cond, const char* what) {
    if (!cond) throw InternalInvariant(what);
}

}  // namespace pairdom
