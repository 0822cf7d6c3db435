#ifndef TORIC_MODEL_HPP
#define TORIC_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toric/graphs.hpp"
#include "toric/matrix.hpp"

namespace toric {

// Mixed-radix configuration indexing over a node sequence with state
// counts; states are 1-based and the last node varies fastest.
struct ConfigSpace {
    std::vector<int> radix;

    std::size_t size() const;
    std::vector<int> unrank(std::size_t index) const; // 1-based states
    std::size_t rank(const std::vector<int>& states) const;
};

struct ModelRowLabel {
    std::vector<int> clique;      // node indices, sorted
    std::vector<int> local_state; // 1-based, parallel to clique
};

// 0/1 matrix of the clique-parameter monomial map: column beta has a one
// exactly in the rows (C, beta|_C) for every maximal clique C.
struct ModelMatrix {
    IntMatrix A;
    std::vector<ModelRowLabel> row_labels;
    ConfigSpace configs;                  // column space
    std::vector<std::string> node_order;  // for printing labels

    std::string column_name(std::size_t col) const;  // "x[(s1,...,sk)]"
};

ModelMatrix model_matrix(const StateGraph& g, std::size_t max_columns = 1000000);

// Partition of the configurations of g by their restriction to a shared
// node sequence; within a group the private configuration varies, last
// private node fastest.
struct GroupedLayout {
    std::vector<int> shared_nodes;   // indices into g.nodes, in shared order
    std::vector<int> private_nodes;  // remaining indices, in g's order
    ConfigSpace shared_space;        // r = shared_space.size() groups
    ConfigSpace private_space;       // identical inner shape for every group

    std::size_t group_count() const { return shared_space.size(); }
    std::size_t group_size() const { return private_space.size(); }

    // configuration column index -> (group, index inside group)
    std::pair<std::size_t, std::size_t> locate(const ConfigSpace& full,
                                               std::size_t config_index) const;
    // (group, inner) -> configuration column index
    std::size_t config_of(const ConfigSpace& full, std::size_t group, std::size_t inner) const;
};

GroupedLayout grouped_layout(const StateGraph& g, const std::vector<std::string>& shared);

} // namespace toric

#endif
