#include "gms/graph_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace gms {

namespace {

std::optional<std::size_t> parse_index(const std::string& token) {
    std::size_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

Pdag read_pdag(std::istream& in) {
    std::optional<Pdag> graph;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream tokens(raw);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) {
            words.push_back(w);
        }
        if (words.empty()) {
            continue;
        }
        if (!graph) {
            if (words.size() != 2 || words[0] != "n") {
                throw ParseError(line_no, "expected header 'n <count>'");
            }
            const auto n = parse_index(words[1]);
            if (!n) {
                throw ParseError(line_no, "invalid vertex count '" + words[1] + "'");
            }
            graph.emplace(*n);
            continue;
        }
        if (words.size() != 3 || (words[1] != "--" && words[1] != "->")) {
            throw ParseError(line_no, "expected 'u -- v' or 'u -> v'");
        }
        const auto u = parse_index(words[0]);
        const auto v = parse_index(words[2]);
        if (!u || !v) {
            throw ParseError(line_no, "invalid vertex index");
        }
        if (*u >= graph->num_vertices() || *v >= graph->num_vertices()) {
            throw ParseError(line_no, "vertex index out of range");
        }
        try {
            if (words[1] == "--") {
                graph->add_line(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
            } else {
                graph->add_arc(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!graph) {
        throw ParseError(line_no, "missing header 'n <count>'");
    }
    return *graph;
}

Pdag parse_pdag(const std::string& text) {
    std::istringstream in(text);
    return read_pdag(in);
}

UndirectedGraph parse_undirected(const std::string& text) {
    const Pdag p = parse_pdag(text);
    if (p.num_arcs() != 0) {
        throw ParseError(0, "expected an undirected graph but found arcs");
    }
    return p.undirected_part();
}

Dag parse_dag(const std::string& text) {
    const Pdag p = parse_pdag(text);
    if (p.num_lines() != 0) {
        throw ParseError(0, "expected a DAG but found undirected edges");
    }
    try {
        return p.to_dag();
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

void write_pdag(std::ostream& out, const Pdag& p) {
    out << "n " << p.num_vertices() << '\n';
    for (VertexId u = 0; u < p.num_vertices(); ++u) {
        for (VertexId v = u + 1; v < p.num_vertices(); ++v) {
            switch (p.mark(u, v)) {
                case Mark::Line: out << u << " -- " << v << '\n'; break;
                case Mark::Out: out << u << " -> " << v << '\n'; break;
                case Mark::In: out << v << " -> " << u << '\n'; break;
                case Mark::None: break;
            }
        }
    }
}

std::string format_pdag(const Pdag& p) {
    std::ostringstream out;
    write_pdag(out, p);
    return out.str();
}

std::string format_dag(const Dag& d) { return format_pdag(Pdag::from_dag(d)); }

std::string format_undirected(const UndirectedGraph& g) { return format_pdag(Pdag::from_undirected(g)); }

}  // namespace gms
