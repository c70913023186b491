#pragma once

#include <optional>
#include <span>
#include <vector>

#include "conlat/concept.hpp"
#include "conlat/schema.hpp"

namespace conlat {

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

/// p <= q in the domain's information order: equality for atoms (symbols,
/// points, buckets), superset for symbol sets, point sets and every
/// real-line region (Interval, IntervalSet, NegatedRegion compare with each
/// other as point sets). Inputs must be canonical. Throws DomainMismatch
/// when the kinds cannot be compared.
bool prop_leq(const Property& p, const Property& q);

/// Greatest lower bound inside one dimension of the convex base space, or
/// nullopt when the dimension has to be dropped (clashing atoms, or a hull
/// or union wider than 2*epsilon). Disjunctive and negated arguments raise
/// PolicyError; their meets live in continuous.hpp.
std::optional<Property> prop_meet(const ValueDomain& domain, const Property& p,
                                  const Property& q);

/// Least upper bound inside one dimension, or nullopt when none exists.
/// Real-line regions join by intersection; a result that is neither a
/// closed bounded set nor the complement of one has no least upper bound
/// among representable values and is reported as undefined.
std::optional<Property> prop_join(const ValueDomain& domain, const Property& p,
                                  const Property& q);

// ---------------------------------------------------------------------------
// Concepts
// ---------------------------------------------------------------------------

/// c <= d: dom c is contained in dom d and c(f) <= d(f) on dom c.
bool subsumes(const Concept& c, const Concept& d);

/// Meet (generalisation). Total; the universal concept when nothing is shared.
Concept generalise(const Concept& c, const Concept& d);

/// Join (unification); nullopt when unification fails.
MeetJoinResult unify(const Concept& c, const Concept& d);

/// Relative complement of meet(c, d) inside c: the entries of c that do
/// not survive unchanged into the meet.
Concept concept_diff(const Concept& c, const Concept& d);

/// The maximal concept an instance denotes. Throws SymbolDomainInInstance
/// when the schema has symbolic features.
Concept to_concept(const Instance& instance);

/// Members of `pool` lying above `c`.
std::vector<Instance> extension(const Concept& c, std::span<const Instance> pool);

/// Same as extension() but returns positions in `pool`.
std::vector<std::size_t> extension_indices(const Concept& c, std::span<const Instance> pool);

}  // namespace conlat
