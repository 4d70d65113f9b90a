#pragma once

#include <string>
#include <vector>

#include "micdt/svar.hpp"

namespace micdt {

struct FenceNode {
    int column = 0;   // index into FenceGraph::columns
    int channel = 0;  // index into FenceGraph::channels
};

enum class FenceEdgeKind { Structural, Granger };

struct FenceEdge {
    FenceNode source;
    FenceNode target;
    double weight = 0.0;  // signed causal factor
    FenceEdgeKind kind = FenceEdgeKind::Granger;
};

// Lattice view of a fitted model: one column per lag, then two current-time
// columns. Granger edges run from a lag column into t_granger; structural
// edges live inside t_structural. C*(D+2) nodes always, edges filtered by the
// build threshold.
struct FenceGraph {
    std::vector<std::string> columns;   // "t-D", .., "t-1", "t_granger", "t_structural"
    std::vector<std::string> channels;
    std::vector<FenceNode> nodes;       // column-major order: all channels of column 0, ...
    std::vector<FenceEdge> edges;
};

// An entry S[i][j] (effect i, cause j) becomes an arrow from j's node to i's
// node. Structural edges come from s0, Granger edges from the off-diagonal
// entries of the corrected (default) or uncorrected lag matrices.
FenceGraph build_fence_graph(const SvarModel& model, double threshold, bool use_corrected = true);

struct DotStyle {
    double min_penwidth = 1.0;
    double max_penwidth = 6.0;
};

// Graphviz digraph: columns as same-rank groups held in order by an invisible
// spine, structural edges blue, Granger edges green, negative factors dashed,
// pen width linear in |weight| with the graph maximum mapping to max_penwidth.
// Byte-deterministic for equal graphs.
std::string to_dot(const FenceGraph& graph, const DotStyle& style = {});

// {columns, nodes: [{column, channel}], edges: [{src, dst, weight, kind, sign}]};
// src/dst are {column, channel} pairs. Deterministic ordering.
std::string to_json(const FenceGraph& graph);

}  // namespace micdt
