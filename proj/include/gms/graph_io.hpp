#pragma once

// Plain-text graph format:
//
//   # comment
//   n 4
//   0 -- 1      (undirected edge)
//   1 -> 2      (arc)

#include "gms/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gms {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Pdag read_pdag(std::istream& in);
Pdag parse_pdag(const std::string& text);

/// Throws ParseError if the text contains arcs.
UndirectedGraph parse_undirected(const std::string& text);
/// Throws ParseError if the text contains lines or a directed cycle.
Dag parse_dag(const std::string& text);

void write_pdag(std::ostream& out, const Pdag& p);
std::string format_pdag(const Pdag& p);
std::string format_dag(const Dag& d);
std::string format_undirected(const UndirectedGraph& g);

}  // namespace gms
