#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "chvatal/complex.hpp"

namespace chvatal {

/// Default node budget for the clique search.
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct StarMax {
    int vertex = -1;
    int size = 0;
};

/// Vertex maximizing the star size (smallest id on ties) and that size.
/// Throws PreconditionError on an empty complex.
StarMax max_star(const Complex& complex);

struct IntersectingMax {
    int size = 0;
    Family witness;
};

/// A maximum-cardinality intersecting subfamily of the complex's faces,
/// found by branch-and-bound maximum-clique search on the compatibility
/// graph (faces as vertices, edges between intersecting pairs) with a
/// greedy-coloring bound. Among all optima the lexicographically least
/// family in face order is returned, so results are deterministic.
/// Throws BudgetError if the search exceeds `node_budget` nodes.
IntersectingMax max_intersecting(const Complex& complex,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// The verdict for one complex. Stars are intersecting families, so
/// max_intersecting_size >= max_star_size always; `holds` means the two are
/// equal, i.e. no intersecting family beats the largest star.
struct Verdict {
    int max_intersecting_size = 0;
    Family max_intersecting_witness;
    int max_star_size = 0;
    std::optional<int> max_star_vertex; ///< empty for the empty complex
    bool holds = true;
};

/// Computes both sides and assembles the verdict. A false verdict is a
/// counterexample and is reported, never thrown.
Verdict verify_chvatal(const Complex& complex,
                       std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace chvatal
