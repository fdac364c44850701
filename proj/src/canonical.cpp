#include "tpk/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "tpk/errors.hpp"
#include "tpk/graph6.hpp"

namespace tpk {

namespace {

// Branch-and-bound over vertex orderings consistent with iterated degree
// refinement, minimizing the column-major upper-triangle bit string.
// Position blocks follow the refinement class ranks; within a node only
// candidates achieving the minimal next column are expanded, twins are
// expanded once, and prefixes that exceed the incumbent are cut.
struct Canonizer {
    uint32_t n = 0;
    std::array<uint16_t, kCanonicalMaxVertices> adj{};
    std::array<uint32_t, kCanonicalMaxVertices> class_of{};
    std::array<uint32_t, kCanonicalMaxVertices> pos_class{};
    std::array<uint16_t, kCanonicalMaxVertices> twin_earlier{};

    std::array<uint16_t, kCanonicalMaxVertices> inc{};
    std::array<uint32_t, kCanonicalMaxVertices> inc_order{};
    bool have_inc = false;
    std::array<uint16_t, kCanonicalMaxVertices> cur{};
    std::array<uint32_t, kCanonicalMaxVertices> order{};

    explicit Canonizer(const Graph& g) {
        n = g.order();
        for (uint32_t v = 0; v < n; ++v) {
            uint16_t row = 0;
            g.for_neighbors(v, [&](uint32_t w) { row |= (uint16_t)(1u << w); });
            adj[v] = row;
        }
        refine();
        for (uint32_t v = 0; v < n; ++v) {
            uint16_t mask = 0;
            for (uint32_t u = 0; u < v; ++u) {
                uint16_t au = adj[u] & (uint16_t)~(1u << v);
                uint16_t av = adj[v] & (uint16_t)~(1u << u);
                if (au == av) mask |= (uint16_t)(1u << u);
            }
            twin_earlier[v] = mask;
        }
    }

    void refine() {
        std::vector<uint32_t> color(n);
        for (uint32_t v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
        for (uint32_t round = 0; round <= n; ++round) {
            std::vector<std::vector<uint32_t>> key(n);
            for (uint32_t v = 0; v < n; ++v) {
                key[v].push_back(color[v]);
                uint16_t w = adj[v];
                while (w) {
                    key[v].push_back(color[std::countr_zero(w)]);
                    w &= (uint16_t)(w - 1);
                }
                std::sort(key[v].begin() + 1, key[v].end());
            }
            std::vector<std::vector<uint32_t>> uniq(key.begin(), key.end());
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            std::vector<uint32_t> next(n);
            for (uint32_t v = 0; v < n; ++v)
                next[v] = (uint32_t)(std::lower_bound(uniq.begin(), uniq.end(), key[v]) -
                                     uniq.begin());
            if (next == color) break;
            color = next;
        }
        for (uint32_t v = 0; v < n; ++v) class_of[v] = color[v];
        std::vector<uint32_t> by_class(n);
        for (uint32_t v = 0; v < n; ++v) by_class[v] = v;
        std::stable_sort(by_class.begin(), by_class.end(),
                         [&](uint32_t a, uint32_t b) { return class_of[a] < class_of[b]; });
        for (uint32_t p = 0; p < n; ++p) pos_class[p] = class_of[by_class[p]];
    }

    uint16_t column(uint32_t v, uint32_t pos) const {
        uint16_t col = 0;
        for (uint32_t i = 0; i < pos; ++i)
            col = (uint16_t)((col << 1) | ((adj[v] >> order[i]) & 1u));
        return col;
    }

    // Returns true when the incumbent was replaced somewhere below.
    bool dfs(uint32_t pos, uint16_t used, bool equal_so_far) {
        if (pos == n) {
            if (have_inc && equal_so_far) return false;  // identical string
            std::copy(cur.begin(), cur.begin() + n, inc.begin());
            std::copy(order.begin(), order.begin() + n, inc_order.begin());
            have_inc = true;
            return true;
        }
        uint16_t avail = 0;
        for (uint32_t v = 0; v < n; ++v)
            if (!((used >> v) & 1) && class_of[v] == pos_class[pos]) avail |= (uint16_t)(1u << v);
        assert(avail);
        uint16_t mincol = 0xffff;
        for (uint16_t m = avail; m;) {
            uint32_t v = std::countr_zero(m);
            m &= (uint16_t)(m - 1);
            mincol = std::min(mincol, column(v, pos));
        }
        bool updated = false;
        bool equal_here = equal_so_far;
        if (have_inc && equal_here) {
            if (mincol > inc[pos]) return false;
        }
        for (uint16_t m = avail; m;) {
            uint32_t v = std::countr_zero(m);
            m &= (uint16_t)(m - 1);
            if (column(v, pos) != mincol) continue;
            if (twin_earlier[v] & avail) continue;  // an unused lower twin covers v
            cur[pos] = mincol;
            order[pos] = v;
            bool child_equal = have_inc && equal_here && mincol == inc[pos];
            if (dfs(pos + 1, (uint16_t)(used | (1u << v)), child_equal)) {
                updated = true;
                // the new incumbent extends the current path, so we are
                // back to an equal prefix with inc[pos] == mincol
                equal_here = true;
            }
        }
        return updated;
    }
};

std::vector<uint32_t> canonical_ordering_impl(const Graph& g) {
    if (g.order() > kCanonicalMaxVertices)
        throw capability_error("canonical labeling limited to " +
                               std::to_string(kCanonicalMaxVertices) + " vertices, got " +
                               std::to_string(g.order()));
    if (g.order() == 0) return {};
    Canonizer c(g);
    c.dfs(0, 0, true);
    return {c.inc_order.begin(), c.inc_order.begin() + c.n};
}

}  // namespace

std::vector<uint32_t> canonical_ordering(const Graph& g) { return canonical_ordering_impl(g); }

std::string canonical_code(const Graph& g) {
    std::vector<uint32_t> ord = canonical_ordering_impl(g);
    const uint32_t n = g.order();
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (g.has_edge(ord[i], ord[j])) edges.emplace_back(i, j);
    return encode_graph6(Graph::from_edges(n, edges));
}

}  // namespace tpk
