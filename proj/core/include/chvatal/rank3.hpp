#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chvatal/complex.hpp"
#include "chvatal/family.hpp"

namespace chvatal {

/// The faces of a family meeting a base face exactly in one vertex `at`.
/// For triangle families these are the triangles "dangling" from the base
/// at that vertex.
struct DanglingSet {
    Face base;
    int at = -1;
    Family triangles;
};

/// All faces t of `family` with t ∩ base == {at}. Throws PreconditionError
/// if base is not a face of the family or at is not a vertex of base.
DanglingSet dangling(const Family& family, Face base, int at);

/// Case transformations for an intersecting family consisting only of
/// triangles. Each returns an intersecting family of size >= |input| that
/// contains an edge (case 2: that is contained in one star), or nothing if
/// the case does not apply. All outputs stay inside closure(input). Each
/// throws PreconditionError when a non-triangle face is present.

/// Applies when some triangle has at most one triangle dangling at one of
/// its vertices: replace the dangler (if any) with the opposite edge.
std::optional<Family> lemma_all_case1(const Family& family);

/// Applies when no two triangles share an edge: keep a most popular vertex
/// a of the first triangle and return that triangle, all other triangles
/// through a, and both of their edges at a. The result lies in st(a).
std::optional<Family> lemma_all_case2(const Family& family);

/// Applies when the graph of the generated complex is not complete: pick a
/// non-edge (c, v) and a triangle abc through c, then either add edges at a,
/// flip along (a, b, v), or add the edge ab, depending on which of a, b
/// appear in faces through v.
std::optional<Family> lemma_all_case3(const Family& family);

/// One step of a certificate trace. Replaying steps in order reconstructs
/// every intermediate family: F_next = (F \ faces_in) ∪ faces_out.
/// Terminal steps (rules "singleton", "in_star", "six_vertex_endgame")
/// change nothing and name the branch that closed the argument.
struct CertificateStep {
    std::string rule;
    Family faces_in;  ///< faces removed by this step
    Family faces_out; ///< faces added by this step
};

/// A checkable witness for |F| <= |st_C(w)| where C = closure(F):
/// the witness vertex, both sizes (star_size recomputed from the closure of
/// the original family), and the trace of transformations that led there.
struct Certificate {
    int witness = -1;
    int star_size = 0;
    int family_size = 0;
    std::vector<CertificateStep> steps;
    Family final_family;
};

/// Certifies an intersecting family of rank <= 3 against the largest-star
/// bound, by the constructive decision tree:
///
///   (i)   a singleton {a} in F forces F ⊆ st(a);
///   (ii)  an edge ab in F forces F ⊆ st(a) ∪ st(b); compress into one star;
///   (iii) otherwise F is all triangles: try the three case transformations
///         in order; case 2 ends in a star, cases 1 and 3 produce an edge
///         and route back to (ii);
///   (iv)  otherwise two triangles abc, abx share an edge, and every
///         triangle dangling from abc at c contains x. With three or more
///         danglers every face meets {c, x}: add cx and go to (ii). With
///         exactly two danglers cxy, cxz the ground collapses to the six
///         vertices a,b,c,x,y,z, |F| <= 10, and |st_C(c)| >= 10: c is the
///         witness.
///
/// Every intermediate family is re-checked (intersecting, inside the
/// original closure, no smaller than its predecessor); every step the
/// argument claims unreachable raises InvariantError if reached, so a
/// completed run is a machine-checked instance of the argument.
///
/// Throws PreconditionError for an empty, non-intersecting, or rank > 3
/// family; InvariantError only for implementation bugs.
Certificate certify_rank3(const Family& family);

} // namespace chvatal
