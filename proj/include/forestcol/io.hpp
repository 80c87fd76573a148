#ifndef FORESTCOL_IO_HPP
#define FORESTCOL_IO_HPP

#include <stdexcept>
#include <string>

#include "forestcol/coloring.hpp"
#include "forestcol/engine.hpp"
#include "forestcol/graph.hpp"

namespace forestcol {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedGraph {
    WeightedMultigraph graph;
    NormalizationReport report;
};

/// GraphDocument: {"params": {"d1", "d2"}, "vertices": [{"id", "w1", "w2"}],
/// "edges": [{"u", "v", "multiplicity"}]}. Normalization warnings (clamped
/// weights or multiplicities) land in the report; structural problems
/// (loops, duplicate ids, unknown endpoints) throw ParseError.
ParsedGraph parse_graph(const std::string& text);

/// Canonical form: vertices sorted by id, edges sorted by (u, v), fixed key
/// order, two-space indent. parse . serialize is the identity and
/// serialize . parse . serialize is byte-stable.
std::string serialize_graph(const WeightedMultigraph& g);

std::string serialize_coloring(const Coloring& c, const CaseTrace* trace = nullptr);
Coloring parse_coloring(const std::string& text);

}  // namespace forestcol

#endif
