#ifndef TORIC_GRAPHS_HPP
#define TORIC_GRAPHS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Finite simple undirected graph with a state count per node. The node
// sequence is the canonical order used everywhere for configuration
// indexing.
struct StateGraph {
    std::vector<std::string> nodes;
    std::vector<int> states;                // parallel to nodes, each >= 1
    std::set<std::pair<int, int>> edges;    // index pairs, first < second

    std::size_t node_count() const { return nodes.size(); }
    int node_index(const std::string& label) const;
    bool has_edge(int a, int b) const;

    void add_node(const std::string& label, int state_count);
    void add_edge(const std::string& a, const std::string& b);

    void validate() const;
};

struct GlueComponent {
    StateGraph graph;
    int copies = 1;
    std::string name; // used in copy-node labels; defaults to G<position>
};

// Glueing data: components shared along the node set N_0, whose induced
// graph H must agree across components.
struct GlueSpec {
    std::vector<GlueComponent> components;
    std::vector<std::string> shared; // N_0 in H's order

    void validate() const;
    // H = subgraph induced on the shared nodes (taken from any component).
    StateGraph shared_graph() const;
};

// Inclusion-maximal cliques via Bron-Kerbosch with pivoting. Each clique
// is a sorted node-index list; the collection is sorted.
std::vector<std::vector<int>> maximal_cliques(const StateGraph& g);

StateGraph induced_subgraph(const StateGraph& g, const std::vector<std::string>& nodes);

// Glued graph on N_0 plus one private block per copy. Copy nodes are named
// "<component>#<copy>/<node>"; node order is N_0 first (in shared order),
// then components in order, copies in order, private nodes in graph order.
StateGraph glue(const GlueSpec& spec);

} // namespace toric

#endif
