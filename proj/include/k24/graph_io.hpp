// graph6 codec (bit-exact per the published format description) and a
// small human-readable edge-list format:
//
//   # comment
//   n 7          (optional, fixes the vertex count)
//   0 1          (one edge per line, 0-indexed)

#ifndef K24_GRAPH_IO_HPP
#define K24_GRAPH_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "k24/graph.hpp"

namespace k24 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace k24

#endif  // K24_GRAPH_IO_HPP
