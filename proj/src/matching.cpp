#include "hypertile/matching.hpp"

#include <algorithm>
#include <functional>

namespace hypertile {

std::vector<std::pair<int, int>> max_bipartite_matching(const std::vector<std::pair<int, int>> &adjacency)
{
    int left_n = 0, right_n = 0;
    for (const auto &[l, r] : adjacency) {
        left_n = std::max(left_n, l + 1);
        right_n = std::max(right_n, r + 1);
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(left_n));
    for (const auto &[l, r] : adjacency)
        adj[static_cast<std::size_t>(l)].push_back(r);
    for (auto &row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    std::vector<int> match_right(static_cast<std::size_t>(right_n), -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int l) {
        for (int r : adj[static_cast<std::size_t>(l)]) {
            if (seen[static_cast<std::size_t>(r)])
                continue;
            seen[static_cast<std::size_t>(r)] = 1;
            if (match_right[static_cast<std::size_t>(r)] < 0 ||
                augment(match_right[static_cast<std::size_t>(r)])) {
                match_right[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < left_n; ++l) {
        seen.assign(static_cast<std::size_t>(right_n), 0);
        augment(l);
    }

    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < right_n; ++r)
        if (match_right[static_cast<std::size_t>(r)] >= 0)
            out.emplace_back(match_right[static_cast<std::size_t>(r)], r);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hypertile
