#pragma once

#include <array>

#include "hadz/coboundary_set.hpp"
#include "hadz/sign_matrix.hpp"

namespace hadz {

// Assembly convention for cocyclic matrices. Generalized is the canonical
// default: every factor has an all-ones first row, so the assembled matrix is
// in normalized form and the walk/path machinery applies directly. Raw keeps
// the plain coboundary matrices; the two assemblies differ exactly by
// negating the rows indexed by the set.
enum class Assembly { Raw, Generalized };

// M(i,j) = delta_d(g_i) * delta_d(g_j) * delta_d(g_i g_j), delta_d being -1
// exactly at g_d. Satisfies the 2-cocycle identity by construction.
SignMatrix coboundary_matrix(int d, GroupParams p);

// coboundary_matrix(d) with row d negated: the first row becomes all ones and
// every row n >= 2 carries exactly two -1 entries.
SignMatrix generalized_coboundary_matrix(int d, GroupParams p);

// R((q,u),(q',v)) = (-1)^(u1 v1 + u2 v2 + u2 v1), independent of q, q'.
SignMatrix representative_matrix(GroupParams p);

// Pointwise product of the chosen coboundary matrices and R.
SignMatrix assemble(const CoboundarySet& s, Assembly conv = Assembly::Generalized);

// Checks f(a,b) f(ab,c) f(a,bc) f(b,c) = 1 over all triples.
bool is_cocycle(const SignMatrix& m, GroupParams p);

struct DroppedRelationsReport {
    bool class1_holds = false; // M_1     = - prod(class-1 basis) * prod(class 2)
    bool class3_holds = false; // M_{4t-1} = prod(class-3 basis) * prod(class 2)
    bool class4_holds = false; // M_{4t}   = prod(class-4 basis) * prod(class 2)
    bool all() const { return class1_holds && class3_holds && class4_holds; }
};

// Verifies the three dropped-coboundary relations as exact matrix identities
// over raw coboundary matrices.
DroppedRelationsReport dropped_relations_check(GroupParams p);

// Complement, within its residue class, every class named in class_mask
// (bit c-1 set means class c). Other indices are unchanged.
CoboundarySet complement_classes(const CoboundarySet& s, unsigned class_mask);

// The eight coboundary sets denoting the same cocyclic matrix, obtained by
// complementing class pairs through the dropped relations. Order of the
// complement patterns: {}, {1,2}, {2,3}, {2,4}, {1,3}, {1,4}, {3,4}, {1,2,3,4}.
std::array<CoboundarySet, 8> eight_expressions(const CoboundarySet& s);

// The expression with the fewest coboundaries; ties broken by
// lexicographically smallest sorted index list.
CoboundarySet minimal_repartition(const CoboundarySet& s);

// Lexicographically smallest sorted index list among the eight expressions.
// Equal keys <=> expressions of the same matrix.
CoboundarySet canonical_key(const CoboundarySet& s);

// Negate every row whose first entry is -1. The eight expressions assemble to
// matrices that agree after this normalization.
SignMatrix row_sign_normalized(const SignMatrix& m);

} // namespace hadz
