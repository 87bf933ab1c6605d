#pragma once

#include <utility>
#include <vector>

namespace hypertile {

/// Maximum matching of a bipartite graph given as (left, right) adjacency
/// pairs, by augmenting paths. Left and right labels are independent
/// non-negative integers. Returned pairs are sorted by left label.
std::vector<std::pair<int, int>> max_bipartite_matching(const std::vector<std::pair<int, int>> &adjacency);

} // namespace hypertile
