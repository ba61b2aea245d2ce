#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace coreres {

using node_t = int;

// Undirected edge, stored with u <= v so edges compare and hash consistently.
struct Edge {
    node_t u;
    node_t v;

    Edge() : u(-1), v(-1) {}
    Edge(node_t a, node_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        return std::hash<std::uint64_t>()(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
            static_cast<std::uint32_t>(e.v));
    }
};

// Exit-code classes used by the CLI: parse=2, param=3, internal=4, io=5.
struct parse_error : std::runtime_error {
    int line;
    explicit parse_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(msg), line(line_no) {}
};

struct param_error : std::runtime_error {
    explicit param_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace coreres
