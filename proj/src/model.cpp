#include "toric/model.hpp"

#include <algorithm>

namespace toric {

std::size_t ConfigSpace::size() const {
    std::size_t s = 1;
    for (int r : radix) s *= static_cast<std::size_t>(r);
    return s;
}

std::vector<int> ConfigSpace::unrank(std::size_t index) const {
    std::vector<int> out(radix.size());
    for (std::size_t k = radix.size(); k-- > 0;) {
        out[k] = static_cast<int>(index % radix[k]) + 1;
        index /= radix[k];
    }
    return out;
}

std::size_t ConfigSpace::rank(const std::vector<int>& states) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < radix.size(); ++k)
        idx = idx * radix[k] + static_cast<std::size_t>(states[k] - 1);
    return idx;
}

std::string ModelMatrix::column_name(std::size_t col) const {
    std::vector<int> st = configs.unrank(col);
    std::string s = "x[(";
    for (std::size_t k = 0; k < st.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(st[k]);
    }
    s += ")]";
    return s;
}

ModelMatrix model_matrix(const StateGraph& g, std::size_t max_columns) {
    g.validate();
    ModelMatrix mm;
    mm.node_order = g.nodes;
    mm.configs.radix = g.states;

    // overflow guard before materializing anything
    std::size_t ncols = 1;
    for (int r : g.states) {
        if (r != 0 && ncols > max_columns / static_cast<std::size_t>(r) + 1)
            throw resource_error("configuration count exceeds limit");
        ncols *= static_cast<std::size_t>(r);
    }
    if (ncols > max_columns)
        throw resource_error("configuration count exceeds limit");

    auto cliques = maximal_cliques(g);
    std::vector<std::size_t> row_offset;
    std::size_t nrows = 0;
    for (const auto& c : cliques) {
        row_offset.push_back(nrows);
        std::size_t local = 1;
        for (int node : c) local *= static_cast<std::size_t>(g.states[node]);
        nrows += local;
        ConfigSpace cs;
        for (int node : c) cs.radix.push_back(g.states[node]);
        for (std::size_t a = 0; a < local; ++a)
            mm.row_labels.push_back(ModelRowLabel{c, cs.unrank(a)});
    }

    mm.A = IntMatrix(nrows, ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
        std::vector<int> beta = mm.configs.unrank(col);
        for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
            const auto& c = cliques[ci];
            ConfigSpace cs;
            std::vector<int> local(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) {
                cs.radix.push_back(g.states[c[k]]);
                local[k] = beta[c[k]];
            }
            mm.A.at(row_offset[ci] + cs.rank(local), col) = 1;
        }
    }
    return mm;
}

std::pair<std::size_t, std::size_t> GroupedLayout::locate(const ConfigSpace& full,
                                                          std::size_t config_index) const {
    std::vector<int> beta = full.unrank(config_index);
    std::vector<int> b0(shared_nodes.size()), bp(private_nodes.size());
    for (std::size_t k = 0; k < shared_nodes.size(); ++k) b0[k] = beta[shared_nodes[k]];
    for (std::size_t k = 0; k < private_nodes.size(); ++k) bp[k] = beta[private_nodes[k]];
    return {shared_space.rank(b0), private_space.rank(bp)};
}

std::size_t GroupedLayout::config_of(const ConfigSpace& full, std::size_t group,
                                     std::size_t inner) const {
    std::vector<int> b0 = shared_space.unrank(group);
    std::vector<int> bp = private_space.unrank(inner);
    std::vector<int> beta(full.radix.size());
    for (std::size_t k = 0; k < shared_nodes.size(); ++k) beta[shared_nodes[k]] = b0[k];
    for (std::size_t k = 0; k < private_nodes.size(); ++k) beta[private_nodes[k]] = bp[k];
    return full.rank(beta);
}

GroupedLayout grouped_layout(const StateGraph& g, const std::vector<std::string>& shared) {
    g.validate();
    GroupedLayout layout;
    std::vector<char> is_shared(g.node_count(), 0);
    for (const auto& s : shared) {
        int idx = g.node_index(s);
        if (idx < 0)
            throw validation_error("grouped_layout: unknown shared node " + s);
        if (is_shared[idx])
            throw validation_error("grouped_layout: duplicate shared node " + s);
        is_shared[idx] = 1;
        layout.shared_nodes.push_back(idx);
        layout.shared_space.radix.push_back(g.states[idx]);
    }
    for (std::size_t k = 0; k < g.node_count(); ++k) {
        if (!is_shared[k]) {
            layout.private_nodes.push_back(static_cast<int>(k));
            layout.private_space.radix.push_back(g.states[k]);
        }
    }
    return layout;
}

} // namespace toric
