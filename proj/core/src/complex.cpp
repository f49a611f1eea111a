#include "chvatal/complex.hpp"

#include <unordered_set>

namespace chvatal {

Complex closure(const Family& family) {
    // inclusion-maximal faces generate the same downset
    std::vector<Face> generators;
    for (Face f : family) {
        bool maximal = true;
        for (Face g : family) {
            if (g != f && f.subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal) generators.push_back(f);
    }

    std::unordered_set<std::uint64_t> seen;
    for (Face g : generators) {
        // enumerate all nonempty submasks of g
        std::uint64_t bits = g.bits();
        for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
            if (sub != 0) seen.insert(sub);
            if (sub == 0) break;
        }
    }

    std::vector<Face> all;
    all.reserve(seen.size());
    for (std::uint64_t bits : seen) all.push_back(Face::from_bits(bits));

    return Complex{Family(family.ground(), std::move(all)),
                   Family(family.ground(), std::move(generators))};
}

Family star(const Complex& complex, int vertex) {
    if (vertex < 0 || vertex >= complex.ground().size())
        throw PreconditionError("unknown vertex");
    std::vector<Face> faces;
    for (Face f : complex.faces)
        if (f.contains(vertex)) faces.push_back(f);
    return Family(complex.ground(), std::move(faces));
}

int star_size(const Complex& complex, int vertex) {
    if (vertex < 0 || vertex >= complex.ground().size())
        throw PreconditionError("unknown vertex");
    int count = 0;
    for (Face f : complex.faces)
        if (f.contains(vertex)) ++count;
    return count;
}

bool graph_is_complete(const Complex& complex) {
    const std::vector<int> used = complex.faces.support().vertices();
    for (std::size_t i = 0; i < used.size(); ++i)
        for (std::size_t j = i + 1; j < used.size(); ++j)
            if (!complex.faces.contains(Face::of({used[i], used[j]})))
                return false;
    return true;
}

} // namespace chvatal
