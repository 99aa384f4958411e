#include "spexlab/canonical.hpp"

#include <algorithm>
#include <string>

#include "spexlab/error.hpp"
#include "spexlab/partition.hpp"
#include "spexlab/quotient.hpp"

namespace spexlab {

namespace {

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), placed_(n_, false), twin_(n_, VertexSet(n_))
    {
        const Partition cells = equitable_refine(g, Partition::unit(n_));
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (std::size_t k = 0; k < cells.cell(c).size(); ++k)
                cell_at_.push_back(static_cast<int>(c));
        cells_ = cells.cells();

        for (int x = 0; x < n_; ++x)
            for (int y = x + 1; y < n_; ++y)
                if (are_twins(x, y)) {
                    twin_[x].insert(y);
                    twin_[y].insert(x);
                }
        order_.reserve(n_);
        columns_.assign(n_, {});
        best_columns_.assign(n_, {});
    }

    CanonicalForm run()
    {
        if (n_ > 0)
            search(0, false);
        CanonicalForm out;
        out.position.assign(n_, 0);
        for (int p = 0; p < n_; ++p)
            out.position[best_order_[p]] = p;
        out.graph = g_.relabeled(out.position);
        return out;
    }

private:
    bool are_twins(int x, int y) const
    {
        const auto rx = g_.row(x);
        const auto ry = g_.row(y);
        for (std::size_t i = 0; i < rx.size(); ++i) {
            Word a = rx[i];
            Word b = ry[i];
            if (static_cast<int>(i) == x / kWordBits)
                b &= ~(Word{1} << (x % kWordBits));
            if (static_cast<int>(i) == y / kWordBits)
                a &= ~(Word{1} << (y % kWordBits));
            if (a != b)
                return false;
        }
        return true;
    }

    /// Column p of the candidate order: adjacency of x to the vertices already
    /// placed at positions 0..p-1.
    std::vector<bool> column(int x) const
    {
        std::vector<bool> col(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i)
            col[i] = g_.adjacent(order_[i], x);
        return col;
    }

    /// `equal`: the current prefix coincides with the best string's prefix.
    void search(int p, bool equal)
    {
        if (p == n_) {
            if (!have_best_ || !equal) {
                best_order_ = order_;
                best_columns_ = columns_;
                have_best_ = true;
                ++updates_;
            }
            return;
        }
        const auto& cell = cells_[cell_at_[p]];
        std::vector<int> tried;
        for (int x : cell) {
            if (placed_[x])
                continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int y) { return twin_[x].contains(y); }))
                continue;
            tried.push_back(x);

            auto col = column(x);
            bool child_equal = equal;
            if (have_best_ && equal) {
                const auto& ref = best_columns_[p];
                if (col > ref)
                    continue;
                child_equal = col == ref;
            }
            const auto before = updates_;
            columns_[p] = std::move(col);
            order_.push_back(x);
            placed_[x] = true;
            search(p + 1, child_equal);
            placed_[x] = false;
            order_.pop_back();
            // A new best found below shares this node's prefix.
            if (updates_ != before)
                equal = true;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_at_;
    std::vector<bool> placed_;
    std::vector<VertexSet> twin_;
    std::vector<int> order_;
    std::vector<std::vector<bool>> columns_;
    std::vector<int> best_order_;
    std::vector<std::vector<bool>> best_columns_;
    bool have_best_ = false;
    std::size_t updates_ = 0;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) { return CanonSearch(g).run(); }

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return canonical_graph(a) == canonical_graph(b);
}

std::uint64_t pack_upper_triangle(const Graph& g)
{
    const int n = g.order();
    if (n > 11)
        throw InvalidInput("packed upper triangle supports n <= 11, got " + std::to_string(n));
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
    return code;
}

Graph unpack_upper_triangle(int n, std::uint64_t code)
{
    if (n < 0 || n > 11)
        throw InvalidInput("packed upper triangle supports 0 <= n <= 11");
    const int bits = n * (n - 1) / 2;
    GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> (bits - 1 - k)) & 1U)
                b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace spexlab
