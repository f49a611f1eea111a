#include "chvatal/oracle.hpp"

#include <bit>
#include <cstddef>
#include <utility>
#include <vector>

#include "chvatal/errors.hpp"

namespace chvatal {

namespace {

/// Dynamic bitset over face indices; complexes can hold more than 64 faces.
struct IndexSet {
    std::vector<std::uint64_t> words;

    explicit IndexSet(int n) : words((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void set(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (std::uint64_t w : words)
            if (w) return true;
        return false;
    }

    int first() const {
        for (std::size_t k = 0; k < words.size(); ++k)
            if (words[k]) return static_cast<int>(k * 64 + std::countr_zero(words[k]));
        return -1;
    }

    IndexSet& operator&=(const IndexSet& o) {
        for (std::size_t k = 0; k < words.size(); ++k) words[k] &= o.words[k];
        return *this;
    }

    void remove(const IndexSet& o) {
        for (std::size_t k = 0; k < words.size(); ++k) words[k] &= ~o.words[k];
    }

    /// Drops every index <= i.
    void keep_above(int i) {
        const std::size_t k = static_cast<std::size_t>(i) >> 6;
        for (std::size_t j = 0; j < k; ++j) words[j] = 0;
        if (k < words.size()) {
            const int r = i & 63;
            if (r == 63)
                words[k] = 0;
            else
                words[k] &= ~((std::uint64_t{2} << r) - 1);
        }
    }
};

/// Branch-and-bound maximum clique on the compatibility graph of the faces
/// (vertices are faces, edges join intersecting pairs), with a greedy
/// coloring bound. One node budget covers every call on the same instance.
class CliqueSearch {
public:
    CliqueSearch(const std::vector<Face>& faces, std::uint64_t budget)
        : m_(static_cast<int>(faces.size())), budget_(budget), adj_(m_, IndexSet(m_)) {
        for (int i = 0; i < m_; ++i)
            for (int j = i + 1; j < m_; ++j)
                if (faces[i].intersects(faces[j])) {
                    adj_[i].set(j);
                    adj_[j].set(i);
                }
    }

    const IndexSet& neighbors(int i) const { return adj_[i]; }

    /// Largest clique size within `candidates`; stops early once `stop_at`
    /// (when positive) is reached, which turns the search into a decision
    /// procedure. Throws BudgetError when the shared node budget runs out.
    int max_clique(const IndexSet& candidates, int stop_at) {
        best_ = 0;
        stop_at_ = stop_at;
        expand(candidates, 0);
        return best_;
    }

private:
    void expand(const IndexSet& candidates, int depth) {
        if (++nodes_ > budget_) throw BudgetError("clique search exceeded its node budget");
        if (stop_at_ > 0 && best_ >= stop_at_) return;
        if (!candidates.any()) {
            if (depth > best_) best_ = depth;
            return;
        }

        // Greedy coloring: vertices listed by increasing color class; the
        // class index bounds the clique size inside the remaining set.
        std::vector<int> order;
        std::vector<int> color;
        IndexSet uncolored = candidates;
        for (int cls = 1; uncolored.any(); ++cls) {
            IndexSet eligible = uncolored;
            while (eligible.any()) {
                const int v = eligible.first();
                order.push_back(v);
                color.push_back(cls);
                uncolored.reset(v);
                eligible.reset(v);
                eligible.remove(adj_[v]);
            }
        }

        IndexSet pool = candidates;
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (depth + color[idx] <= best_) return;
            const int v = order[idx];
            IndexSet next = pool;
            next &= adj_[v];
            expand(next, depth + 1);
            if (stop_at_ > 0 && best_ >= stop_at_) return;
            pool.reset(v);
        }
    }

    int m_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int best_ = 0;
    int stop_at_ = -1;
    std::vector<IndexSet> adj_;
};

} // namespace

StarMax max_star(const Complex& complex) {
    if (complex.empty()) throw PreconditionError("the empty complex has no star");
    StarMax out;
    for (int v : complex.faces.support().vertices()) {
        const int size = star_size(complex, v);
        if (size > out.size) {
            out.vertex = v;
            out.size = size;
        }
    }
    return out;
}

IntersectingMax max_intersecting(const Complex& complex, std::uint64_t node_budget) {
    const std::vector<Face>& faces = complex.faces.faces();
    const int m = static_cast<int>(faces.size());
    IntersectingMax out;
    out.witness = Family(complex.ground());
    if (m == 0) return out;

    CliqueSearch search(faces, node_budget);
    IndexSet all(m);
    for (int i = 0; i < m; ++i) all.set(i);
    const int best = search.max_clique(all, -1);
    out.size = best;

    // Lex-least witness: walk the faces in order and keep an index exactly
    // when some optimum clique extends the current prefix through it.
    std::vector<int> chosen;
    IndexSet cand = all;
    int need = best;
    for (int i = 0; i < m && need > 0; ++i) {
        if (!cand.test(i)) continue;
        IndexSet next = cand;
        next &= search.neighbors(i);
        next.keep_above(i);
        if (need == 1 || search.max_clique(next, need - 1) >= need - 1) {
            chosen.push_back(i);
            cand = next;
            --need;
        }
    }
    detail::check_invariant(need == 0, "witness reconstruction must reach the optimum size");

    Family witness(complex.ground());
    for (int i : chosen) witness = witness.with(faces[i]);
    detail::check_invariant(is_intersecting(witness), "the witness must be intersecting");
    out.witness = std::move(witness);
    return out;
}

Verdict verify_chvatal(const Complex& complex, std::uint64_t node_budget) {
    Verdict verdict;
    IntersectingMax best = max_intersecting(complex, node_budget);
    verdict.max_intersecting_size = best.size;
    verdict.max_intersecting_witness = std::move(best.witness);
    if (!complex.empty()) {
        const StarMax star = max_star(complex);
        verdict.max_star_size = star.size;
        verdict.max_star_vertex = star.vertex;
    }
    detail::check_invariant(verdict.max_intersecting_size >= verdict.max_star_size,
                            "stars are intersecting, so the maximum cannot be smaller");
    verdict.holds = verdict.max_intersecting_size == verdict.max_star_size;
    return verdict;
}

} // namespace chvatal
