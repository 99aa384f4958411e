#include "spexlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "spexlab/canonical.hpp"
#include "spexlab/error.hpp"
#include "spexlab/parallel.hpp"

namespace spexlab {

namespace {

void sort_unique(std::vector<std::uint64_t>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Children of one parent whose new vertex has minimum degree.
void extend_parent(const Graph& parent, std::vector<std::uint64_t>& out)
{
    const int k = parent.order();
    const auto deg = parent.degrees();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        const int size = std::popcount(mask);
        bool ok = true;
        for (int x = 0; x < k && ok; ++x)
            ok = size <= deg[x] + static_cast<int>((mask >> x) & 1U);
        if (!ok)
            continue;
        GraphBuilder b(k + 1);
        for (auto [u, v] : parent.edges())
            b.add_edge(u, v);
        for (int x = 0; x < k; ++x)
            if ((mask >> x) & 1U)
                b.add_edge(x, k);
        out.push_back(canonical_code(std::move(b).build()));
    }
}

std::vector<std::uint64_t> next_level(int k, const std::vector<std::uint64_t>& parents, int jobs)
{
    const int workers = std::max(1, std::min<int>(resolve_jobs(jobs), static_cast<int>(parents.size())));
    std::vector<std::vector<std::uint64_t>> partial(workers);

    auto work = [&](int w) {
        auto& out = partial[w];
        for (std::size_t i = w; i < parents.size(); i += workers) {
            extend_parent(unpack_upper_triangle(k, parents[i]), out);
            if (out.size() > (std::size_t{1} << 22))
                sort_unique(out);
        }
        sort_unique(out);
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }

    std::vector<std::uint64_t> merged;
    for (auto& p : partial)
        merged.insert(merged.end(), p.begin(), p.end());
    sort_unique(merged);
    return merged;
}

} // namespace

std::vector<std::uint64_t> enumerate_codes(int n, int jobs)
{
    if (n < 0)
        throw InvalidInput("enumeration order must be non-negative");
    if (n > kMaxEnumerationOrder)
        throw FeasibilityError("isomorph-free enumeration is limited to n <= " +
                               std::to_string(kMaxEnumerationOrder) + ", got n=" + std::to_string(n));
    std::vector<std::uint64_t> level{0};
    for (int k = 1; k < n; ++k)
        level = next_level(k, level, jobs);
    return level;
}

std::vector<Graph> enumerate_graphs(int n, int jobs)
{
    const auto codes = enumerate_codes(n, jobs);
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto c : codes)
        out.push_back(unpack_upper_triangle(n, c));
    return out;
}

} // namespace spexlab
