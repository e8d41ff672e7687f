#include "gms/essential.hpp"

#include "gms/amo.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace gms {

bool markov_equivalent(const Dag& a, const Dag& b) {
    if (a.num_vertices() != b.num_vertices()) {
        throw std::invalid_argument("markov_equivalent: vertex counts differ");
    }
    return skeleton(a) == skeleton(b) && immoralities(a) == immoralities(b);
}

std::vector<Dag> mec_of_dag(const Dag& d, std::size_t cap) {
    const UndirectedGraph skel = skeleton(d);
    const auto& edges = skel.edges();
    if (edges.size() >= 63 || (std::uint64_t{1} << edges.size()) > cap) {
        throw CapExceeded("mec_of_dag: 2^" + std::to_string(edges.size()) + " orientations to scan", cap);
    }
    const auto target = immoralities(d);
    std::vector<Dag> out;
    std::vector<Arc> arcs(edges.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            arcs[e] = ((mask >> e) & 1U) ? Arc{edges[e].u, edges[e].v} : Arc{edges[e].v, edges[e].u};
        }
        if (!is_acyclic(skel.num_vertices(), arcs)) {
            continue;
        }
        Dag candidate(skel.num_vertices(), arcs);
        if (immoralities(candidate) == target) {
            out.push_back(std::move(candidate));
        }
    }
    std::sort(out.begin(), out.end(), [](const Dag& x, const Dag& y) { return x.arcs() < y.arcs(); });
    return out;
}

Pdag essential_graph_by_intersection(const Dag& d, std::size_t cap) {
    const auto members = mec_of_dag(d, cap);
    Pdag out(d.num_vertices());
    for (const Arc& a : d.arcs()) {
        const bool fixed = std::all_of(members.begin(), members.end(),
                                       [&](const Dag& m) { return m.has_arc(a.from, a.to); });
        if (fixed) {
            out.add_arc(a.from, a.to);
        } else {
            out.add_line(a.from, a.to);
        }
    }
    return out;
}

bool is_strongly_protected(const Pdag& p, VertexId u, VertexId v) {
    if (u >= p.num_vertices() || v >= p.num_vertices() || u == v || !p.has_arc(u, v)) {
        throw std::invalid_argument("is_strongly_protected: " + std::to_string(u) + " -> " + std::to_string(v) +
                                    " is not an arc");
    }
    const auto n = static_cast<VertexId>(p.num_vertices());
    std::vector<VertexId> line_nbrs;
    for (VertexId w = 0; w < n; ++w) {
        if (w == u || w == v) {
            continue;
        }
        if (p.has_arc(w, u) && !p.adjacent(w, v)) {
            return true;  // (a)
        }
        if (p.has_arc(w, v) && !p.adjacent(u, w)) {
            return true;  // (b)
        }
        if (p.has_arc(u, w) && p.has_arc(w, v)) {
            return true;  // (c)
        }
        if (p.has_line(u, w) && p.has_arc(w, v)) {
            line_nbrs.push_back(w);
        }
    }
    for (std::size_t i = 0; i < line_nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < line_nbrs.size(); ++j) {
            if (!p.adjacent(line_nbrs[i], line_nbrs[j])) {
                return true;  // (d)
            }
        }
    }
    return false;
}

bool protected_directed_only(const Dag& d, VertexId u, VertexId v) {
    if (u >= d.num_vertices() || v >= d.num_vertices() || !d.has_arc(u, v)) {
        throw std::invalid_argument("protected_directed_only: " + std::to_string(u) + " -> " + std::to_string(v) +
                                    " is not an arc");
    }
    std::vector<VertexId> others;
    for (VertexId w : d.parents(v)) {
        if (w != u) {
            others.push_back(w);
        }
    }
    return d.parents(u) != others;
}

std::string essential_graph_violation(const Pdag& p) {
    if (has_partially_directed_cycle(p)) {
        return "partially directed cycle";
    }
    if (!is_chordal(p.undirected_part())) {
        return "undirected part is not chordal";
    }
    const auto n = static_cast<VertexId>(p.num_vertices());
    for (const Arc& a : p.arcs()) {
        for (VertexId c = 0; c < n; ++c) {
            if (c != a.from && p.has_line(a.to, c) && !p.adjacent(a.from, c)) {
                return "induced " + std::to_string(a.from) + " -> " + std::to_string(a.to) + " -- " +
                       std::to_string(c);
            }
        }
    }
    for (const Arc& a : p.arcs()) {
        if (!is_strongly_protected(p, a.from, a.to)) {
            return "arc " + std::to_string(a.from) + " -> " + std::to_string(a.to) + " is not strongly protected";
        }
    }
    return {};
}

bool is_essential_graph(const Pdag& p) { return essential_graph_violation(p).empty(); }

EssentialGraph::EssentialGraph(Pdag p) : pdag_(std::move(p)) {
    const std::string why = essential_graph_violation(pdag_);
    if (!why.empty()) {
        throw std::invalid_argument("not an essential graph: " + why);
    }
}

EssentialGraph essential_graph_of_dag(const Dag& d) {
    Pdag p = Pdag::from_dag(d);
    for (;;) {
        bool changed = false;
        for (const Arc& a : p.arcs()) {
            if (!is_strongly_protected(p, a.from, a.to)) {
                p.set_line(a.from, a.to);
                changed = true;
                break;
            }
        }
        if (!changed) {
            break;
        }
    }
    return EssentialGraph(std::move(p));
}

BigInt class_size(const EssentialGraph& eg) { return count_amos(eg.pdag().undirected_part()); }

std::vector<Dag> class_members(const EssentialGraph& eg, std::size_t cap) {
    const BigInt size = class_size(eg);
    if (size > cap) {
        throw CapExceeded("class_members: class of size " + size.str(), cap);
    }
    const auto lines = std::make_shared<const UndirectedGraph>(eg.pdag().undirected_part());
    const auto fixed = eg.pdag().arcs();
    std::vector<Dag> out;
    for (const Amo& a : enumerate_amos(lines, cap)) {
        std::vector<Arc> arcs = a.arcs();
        arcs.insert(arcs.end(), fixed.begin(), fixed.end());
        out.emplace_back(eg.num_vertices(), arcs);
    }
    std::sort(out.begin(), out.end(), [](const Dag& x, const Dag& y) { return x.arcs() < y.arcs(); });
    return out;
}

}  // namespace gms
