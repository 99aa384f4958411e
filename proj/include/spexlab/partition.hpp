#pragma once

#include <cstddef>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Ordered list of disjoint vertex cells covering 0..n-1.
class Partition {
public:
    Partition() = default;

    /// Validates disjointness and coverage; empty cells only when allowed.
    Partition(int n, std::vector<std::vector<int>> cells, bool allow_empty = false);

    /// Single cell holding every vertex.
    static Partition unit(int n);
    /// Cells from a cell-index assignment; `cell_count` cells, possibly empty.
    static Partition from_assignment(const std::vector<int>& cell_of, int cell_count, bool allow_empty = false);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
    const std::vector<int>& cell(std::size_t i) const { return cells_.at(i); }
    int cell_of(int v) const { return cell_of_.at(v); }
    const std::vector<int>& assignment() const noexcept { return cell_of_; }

    bool operator==(const Partition& o) const { return n_ == o.n_ && cells_ == o.cells_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
};

/// e(V_i) summed over cells.
std::size_t internal_edges(const Graph& g, const Partition& p);
/// Sum of e(V_i, V_j) over i < j.
std::size_t cross_edges(const Graph& g, const Partition& p);
/// d_{V_i}(v) for the cell V_i containing v.
int internal_degree(const Graph& g, const Partition& p, int v);

enum class CrossMode { exact, local };

struct CrossPartitionResult {
    Partition partition;
    std::size_t cross_edges = 0;
    /// True when the partition is a proven maximiser (exact mode).
    bool exact = false;
};

/// Partition into r cells maximising the number of cross edges.
/// exact: exhaustive over restricted-growth assignments (guarded: n <= 16 for
/// r = 2, n <= 12 for r = 3, r^n <= 3^12 beyond). local: single-vertex moves
/// on strict improvement, scanning vertices in index order.
CrossPartitionResult max_cross_partition(const Graph& g, int r, CrossMode mode);

/// True if no single-vertex move strictly increases the cross-edge count.
bool is_locally_stable(const Graph& g, const Partition& p);

struct DegreeClasses {
    double eps = 0.0;
    std::vector<int> W;
    std::vector<int> L;
    std::vector<std::vector<int>> W_cells;
    std::vector<std::vector<int>> L_cells;
    /// Thresholds were compared in exact rational arithmetic.
    bool exact_thresholds = false;
};

/// W_i = {v in V_i : d_{V_i}(v) >= 3 sqrt(eps) n},
/// L_i = {v in V_i : d(v) <= (1 - 1/r - 5 sqrt(eps)) n}, r = number of cells.
/// Boundary ties count as members. When eps equals p/q with q <= 10^6 the
/// comparisons are done exactly in integers.
DegreeClasses degree_classes(const Graph& g, const Partition& p, double eps);

} // namespace spexlab
