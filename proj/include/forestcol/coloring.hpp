#ifndef FORESTCOL_COLORING_HPP
#define FORESTCOL_COLORING_HPP

#include <map>
#include <stdexcept>

#include "forestcol/graph.hpp"

namespace forestcol {

/// Partition of a vertex set into classes 1 and 2.
struct Coloring {
    std::map<VertexId, int> assignment;

    int class_of(VertexId id) const {
        auto it = assignment.find(id);
        if (it == assignment.end())
            throw std::invalid_argument("vertex " + std::to_string(id) + " not colored");
        return it->second;
    }

    bool has(VertexId id) const { return assignment.count(id) > 0; }

    void set(VertexId id, int cls) { assignment[id] = cls; }

    void merge(const Coloring& other) {
        assignment.insert(other.assignment.begin(), other.assignment.end());
    }
};

}  // namespace forestcol

#endif
