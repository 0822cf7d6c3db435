#include "toric/graphs.hpp"

#include <algorithm>
#include <map>

namespace toric {

int StateGraph::node_index(const std::string& label) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == label) return static_cast<int>(i);
    return -1;
}

bool StateGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) != 0;
}

void StateGraph::add_node(const std::string& label, int state_count) {
    if (node_index(label) >= 0)
        throw validation_error("duplicate node: " + label);
    if (state_count < 1)
        throw validation_error("node " + label + " needs at least one state");
    nodes.push_back(label);
    states.push_back(state_count);
}

void StateGraph::add_edge(const std::string& a, const std::string& b) {
    int ia = node_index(a), ib = node_index(b);
    if (ia < 0) throw validation_error("edge endpoint is not a node: " + a);
    if (ib < 0) throw validation_error("edge endpoint is not a node: " + b);
    if (ia == ib) throw validation_error("self-loop at node " + a);
    if (ia > ib) std::swap(ia, ib);
    edges.insert({ia, ib});
}

void StateGraph::validate() const {
    if (states.size() != nodes.size())
        throw validation_error("states must be given for every node");
    std::set<std::string> seen;
    for (const auto& n : nodes)
        if (!seen.insert(n).second)
            throw validation_error("duplicate node: " + n);
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] < 1)
            throw validation_error("node " + nodes[i] + " needs at least one state");
    int n = static_cast<int>(nodes.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b >= n)
            throw validation_error("edge endpoint out of range");
        if (a >= b)
            throw validation_error("edge pair not normalized");
    }
}

namespace {

void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    // pivot: vertex of P union X with most neighbours in P
    int pivot = -1, best = -1;
    for (const auto& set : {P, X})
        for (int u : set) {
            int cnt = 0;
            for (int v : P)
                if (adj[u][v]) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
    std::vector<int> cands;
    for (int v : P)
        if (pivot < 0 || !adj[pivot][v]) cands.push_back(v);

    for (int v : cands) {
        std::vector<int> P2, X2;
        for (int u : P)
            if (adj[v][u]) P2.push_back(u);
        for (int u : X)
            if (adj[v][u]) X2.push_back(u);
        R.push_back(v);
        bron_kerbosch(adj, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const StateGraph& g) {
    g.validate();
    int n = static_cast<int>(g.node_count());
    if (n == 0) return {};
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;

    std::vector<int> R, P(n), X;
    for (int i = 0; i < n; ++i) P[i] = i;
    std::vector<std::vector<int>> out;
    bron_kerbosch(adj, R, std::move(P), std::move(X), out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

StateGraph induced_subgraph(const StateGraph& g, const std::vector<std::string>& nodes) {
    g.validate();
    StateGraph sub;
    std::map<int, int> old_to_new;
    for (const auto& label : nodes) {
        int idx = g.node_index(label);
        if (idx < 0)
            throw validation_error("induced_subgraph: unknown node " + label);
        old_to_new[idx] = static_cast<int>(sub.nodes.size());
        sub.add_node(label, g.states[idx]);
    }
    for (auto [a, b] : g.edges) {
        auto ia = old_to_new.find(a), ib = old_to_new.find(b);
        if (ia != old_to_new.end() && ib != old_to_new.end())
            sub.add_edge(g.nodes[a], g.nodes[b]);
    }
    return sub;
}

void GlueSpec::validate() const {
    if (components.empty())
        throw validation_error("glue spec needs at least one component");
    int total = 0;
    for (const auto& c : components) {
        c.graph.validate();
        if (c.copies < 0)
            throw validation_error("negative copy count");
        total += c.copies;
    }
    if (total < 1)
        throw validation_error("glue spec needs at least one copy in total");
    {
        std::set<std::string> seen;
        for (const auto& s : shared)
            if (!seen.insert(s).second)
                throw validation_error("duplicate shared node: " + s);
    }

    // every component contains N_0, with agreeing states and induced graph
    for (const auto& s : shared)
        if (components.front().graph.node_index(s) < 0)
            throw validation_error("component is missing shared node " + s);
    const StateGraph h0 = induced_subgraph(components.front().graph, shared);
    for (const auto& c : components) {
        for (const auto& s : shared)
            if (c.graph.node_index(s) < 0)
                throw validation_error("component is missing shared node " + s);
        StateGraph hi = induced_subgraph(c.graph, shared);
        for (std::size_t k = 0; k < shared.size(); ++k)
            if (hi.states[k] != h0.states[k])
                throw validation_error("state count of shared node " + shared[k] +
                                       " differs between components");
        for (auto e : hi.edges)
            if (!h0.edges.count(e))
                throw validation_error("induced subgraphs on shared nodes differ at edge {" +
                                       shared[e.first] + "," + shared[e.second] + "}");
        for (auto e : h0.edges)
            if (!hi.edges.count(e))
                throw validation_error("induced subgraphs on shared nodes differ at edge {" +
                                       shared[e.first] + "," + shared[e.second] + "}");
    }
}

StateGraph GlueSpec::shared_graph() const {
    return induced_subgraph(components.front().graph, shared);
}

StateGraph glue(const GlueSpec& spec) {
    spec.validate();
    StateGraph h = spec.shared_graph();

    StateGraph out;
    for (std::size_t k = 0; k < h.nodes.size(); ++k)
        out.add_node(h.nodes[k], h.states[k]);
    for (auto [a, b] : h.edges)
        out.add_edge(h.nodes[a], h.nodes[b]);

    for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
        const auto& comp = spec.components[ci];
        std::string base = comp.name.empty() ? "G" + std::to_string(ci + 1) : comp.name;
        for (int copy = 1; copy <= comp.copies; ++copy) {
            std::string prefix = base + "#" + std::to_string(copy) + "/";
            // private nodes of this copy, in the component's node order
            std::vector<std::string> mapped(comp.graph.node_count());
            for (std::size_t k = 0; k < comp.graph.node_count(); ++k) {
                const std::string& label = comp.graph.nodes[k];
                bool is_shared = std::find(spec.shared.begin(), spec.shared.end(), label) !=
                                 spec.shared.end();
                if (is_shared) {
                    mapped[k] = label;
                } else {
                    mapped[k] = prefix + label;
                    out.add_node(mapped[k], comp.graph.states[k]);
                }
            }
            for (auto [a, b] : comp.graph.edges) {
                int ia = out.node_index(mapped[a]), ib = out.node_index(mapped[b]);
                if (ia > ib) std::swap(ia, ib);
                out.edges.insert({ia, ib});
            }
        }
    }
    out.validate();
    return out;
}

} // namespace toric
