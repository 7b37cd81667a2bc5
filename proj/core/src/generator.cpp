#include "wheeler_lcp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace wlcp {

wheeler_dfa random_wheeler_dfa(std::mt19937_64& rng, uint32_t max_n, uint32_t max_sigma) {
    const uint32_t n =
        max_n <= 2 ? max_n : std::uniform_int_distribution<uint32_t>(2, max_n)(rng);
    const uint32_t nlabels =
        std::max<uint32_t>(1, std::uniform_int_distribution<uint32_t>(1, std::min(max_sigma, 26u))(rng));

    // nondecreasing labels for states 2..n
    std::vector<uint32_t> lab(n + 1, 0);
    for (uint32_t i = 2; i <= n; ++i)
        lab[i] = std::uniform_int_distribution<uint32_t>(0, nlabels - 1)(rng);
    std::sort(lab.begin() + std::min<size_t>(2, lab.size()), lab.end());

    std::string lambda(n + 1, '#');
    lambda[0] = ' ';
    for (uint32_t i = 2; i <= n; ++i) lambda[i] = static_cast<char>('a' + lab[i]);

    std::vector<edge> edges;
    edges.push_back({1, 1});
    std::vector<uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 1);

    // per label block: sorted random source set split into consecutive groups
    uint32_t i = 2;
    while (i <= n) {
        uint32_t j = i;
        while (j + 1 <= n && lab[j + 1] == lab[i]) ++j;
        const uint32_t m = j - i + 1;  // block size
        uint32_t extra = std::uniform_int_distribution<uint32_t>(0, std::min(n - m, m))(rng);
        uint32_t take = m + extra;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<uint32_t> sources(pool.begin(), pool.begin() + take);
        std::sort(sources.begin(), sources.end());
        // m-1 cut positions among the take-1 gaps
        std::vector<uint32_t> gaps(take - 1);
        std::iota(gaps.begin(), gaps.end(), 1);
        std::shuffle(gaps.begin(), gaps.end(), rng);
        std::vector<uint32_t> cuts(gaps.begin(), gaps.begin() + (m - 1));
        cuts.push_back(0);
        cuts.push_back(take);
        std::sort(cuts.begin(), cuts.end());
        for (uint32_t g = 0; g < m; ++g)
            for (uint32_t p = cuts[g]; p < cuts[g + 1]; ++p) edges.push_back({sources[p], i + g});
        i = j + 1;
    }

    // prune unreachable states; the induced order stays Wheeler
    std::vector<std::vector<uint32_t>> adj(n + 1);
    for (const edge& ed : edges) adj[ed.src].push_back(ed.dst);
    std::vector<bool> reach(n + 1, false);
    std::queue<uint32_t> q;
    reach[1] = true;
    q.push(1);
    while (!q.empty()) {
        uint32_t u = q.front();
        q.pop();
        for (uint32_t v : adj[u])
            if (!reach[v]) {
                reach[v] = true;
                q.push(v);
            }
    }
    std::vector<uint32_t> newid(n + 1, 0);
    uint32_t kept = 0;
    for (uint32_t s = 1; s <= n; ++s)
        if (reach[s]) newid[s] = ++kept;

    std::vector<edge> kept_edges;
    for (const edge& ed : edges)
        if (reach[ed.src] && reach[ed.dst]) kept_edges.push_back({newid[ed.src], newid[ed.dst]});
    std::string kept_lambda(kept, '#');
    for (uint32_t s = 1; s <= n; ++s)
        if (reach[s]) kept_lambda[newid[s] - 1] = lambda[s];

    // random finals
    std::vector<uint32_t> finals;
    for (uint32_t s = 1; s <= kept; ++s)
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) finals.push_back(s);

    return wheeler_dfa::validate(kept, std::move(kept_edges), std::move(kept_lambda), finals);
}

}  // namespace wlcp
