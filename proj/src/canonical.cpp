#include "betti/canonical.hpp"

#include <algorithm>
#include <queue>

namespace betti {

namespace {

void push_u16(std::string& out, unsigned v) {
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

void push_u32(std::string& out, unsigned long v) {
    for (int k = 3; k >= 0; --k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
}

class CanonSearch {
public:
    explicit CanonSearch(const SimplicialComplex& ball) : B(ball), n(static_cast<int>(ball.vertex_count())) {}

    std::string run(const std::vector<int>& initial) {
        std::vector<int> colors = initial;
        refine(colors);
        descend(colors);
        return best;
    }

private:
    const SimplicialComplex& B;
    int n;
    std::string best;
    bool have_best = false;
    long long nodes = 0;
    static constexpr long long kNodeLimit = 2'000'000;

    int distinct(const std::vector<int>& colors) const {
        std::vector<int> c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    // Colour refinement: the new colour of v ranks (old colour, sorted multiset
    // of (dim, sorted co-vertex colours) over the simplices containing v).
    void refine(std::vector<int>& colors) const {
        int count = distinct(colors);
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> sigs(n);
            for (int v = 0; v < n; ++v) {
                std::vector<std::vector<int>> rows;
                for (int dim = 1; dim <= B.dimension(); ++dim) {
                    for (int si : B.vertex_incidence(dim)[v]) {
                        const Simplex& s = B.simplices(dim)[si];
                        std::vector<int> row{dim};
                        for (Vertex w : s) {
                            int wi = B.vertex_index(w);
                            if (wi != v) row.push_back(colors[wi]);
                        }
                        std::sort(row.begin() + 1, row.end());
                        rows.push_back(std::move(row));
                    }
                }
                std::sort(rows.begin(), rows.end());
                std::vector<int> flat{colors[v]};
                for (const auto& row : rows) {
                    flat.insert(flat.end(), row.begin(), row.end());
                    flat.push_back(-1);
                }
                sigs[v] = {std::move(flat), v};
            }
            std::sort(sigs.begin(), sigs.end());
            std::vector<int> next(n);
            int rank = 0;
            for (int k = 0; k < n; ++k) {
                if (k > 0 && sigs[k].first != sigs[k - 1].first) ++rank;
                next[sigs[k].second] = rank;
            }
            int next_count = rank + 1;
            colors = std::move(next);
            if (next_count == count) return;
            count = next_count;
        }
    }

    // Swapping a and b (same refinement cell) is a simplicial automorphism
    // iff every simplex through a or b maps to a stored simplex.
    bool swap_is_automorphism(int a, int b) const {
        Vertex va = B.vertex_id(a), vb = B.vertex_id(b);
        auto check_through = [&](int v) {
            for (int dim = 1; dim <= B.dimension(); ++dim) {
                for (int si : B.vertex_incidence(dim)[v]) {
                    Simplex s = B.simplices(dim)[si];
                    for (auto& x : s) {
                        if (x == va) x = vb;
                        else if (x == vb) x = va;
                    }
                    std::sort(s.begin(), s.end());
                    s.erase(std::unique(s.begin(), s.end()), s.end());
                    if (static_cast<int>(s.size()) != dim + 1 || !B.contains(s)) return false;
                }
            }
            return true;
        };
        return check_through(a) && check_through(b);
    }

    void descend(std::vector<int>& colors) {
        if (++nodes > kNodeLimit)
            throw Error(Errc::too_large, "canonical labeling search exceeded node limit");

        // first non-singleton cell, by colour value
        int target = -1;
        {
            std::vector<int> size(n, 0);
            for (int c : colors) ++size[c];
            for (int c = 0; c < n; ++c)
                if (size[c] >= 2) { target = c; break; }
        }
        if (target < 0) {
            std::string enc = encode(colors);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }

        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(v);

        std::vector<int> kept;
        for (int u : cell) {
            bool redundant = false;
            for (int k : kept)
                if (swap_is_automorphism(k, u)) { redundant = true; break; }
            if (redundant) continue;
            kept.push_back(u);

            std::vector<int> child(n);
            for (int v = 0; v < n; ++v) child[v] = colors[v] * 2 + (v == u ? 0 : 1);
            refine(child);
            descend(child);
        }
    }

    std::string encode(const std::vector<int>& labels) const {
        std::string out;
        push_u16(out, static_cast<unsigned>(n));
        for (int dim = 1; dim <= B.dimension(); ++dim) {
            const auto& level = B.simplices(dim);
            out.push_back(static_cast<char>(dim));
            push_u32(out, level.size());
            std::vector<std::vector<int>> tuples;
            tuples.reserve(level.size());
            for (const auto& s : level) {
                std::vector<int> t;
                t.reserve(s.size());
                for (Vertex v : s) t.push_back(labels[B.vertex_index(v)]);
                std::sort(t.begin(), t.end());
                tuples.push_back(std::move(t));
            }
            std::sort(tuples.begin(), tuples.end());
            for (const auto& t : tuples)
                for (int l : t) push_u16(out, static_cast<unsigned>(l));
        }
        return out;
    }
};

} // namespace

CanonicalCode canonical_code(const RootedBall& b) {
    const SimplicialComplex& B = b.ball;
    int n = static_cast<int>(B.vertex_count());
    if (n == 0) throw Error(Errc::empty_complex, "cannot canonicalize an empty ball");

    // Initial colours: distance to the root set in the ball's 1-skeleton.
    // Root-preserving isomorphisms preserve this, and it pins the root
    // vertices to the leading labels.
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    for (Vertex v : b.root) {
        int vi = B.vertex_index(v);
        if (vi < 0) throw Error(Errc::unknown_vertex, "root vertex missing from ball");
        dist[vi] = 0;
        q.push(vi);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : B.skeleton_adjacency()[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    for (auto& d : dist)
        if (d < 0) d = n; // unreachable vertices sort last (cannot occur for real balls)

    CanonSearch search(B);
    std::string body = search.run(dist);

    CanonicalCode code;
    code.radius = b.radius;
    code.root_dimension = b.root_dimension;
    code.bytes.push_back(0x01); // code format version
    code.bytes.push_back(static_cast<char>(b.root_dimension));
    push_u16(code.bytes, static_cast<unsigned>(b.radius));
    code.bytes.push_back(static_cast<char>(b.root.size()));
    code.bytes += body;
    return code;
}

} // namespace betti
