#pragma once

#include "chvatal/family.hpp"

namespace chvatal {

/// A simplicial complex (downset): a family closed under taking nonempty
/// subsets, materialized eagerly, together with its inclusion-maximal faces.
struct Complex {
    Family faces;      ///< every face, subset-closed
    Family generators; ///< the inclusion-maximal faces; closure(generators) == this

    const GroundSet& ground() const { return faces.ground(); }
    bool empty() const { return faces.empty(); }
    int size() const { return faces.size(); }

    bool operator==(const Complex& o) const { return faces == o.faces; }
};

/// Smallest complex containing every face of `family`: all nonempty subsets
/// of its faces. The empty family closes to the empty complex.
Complex closure(const Family& family);

/// The faces of `complex` that contain `vertex` (an intersecting family).
/// Throws PreconditionError if `vertex` is not a ground-set vertex.
Family star(const Complex& complex, int vertex);

/// |star(complex, vertex)| without materializing the family.
int star_size(const Complex& complex, int vertex);

/// True iff every pair of vertices that appear in some face spans an edge
/// of the complex. Vacuously true when fewer than two vertices are used.
bool graph_is_complete(const Complex& complex);

} // namespace chvatal
