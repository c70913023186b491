#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "conlat/concept.hpp"

namespace conlat {

/// An explicit finite set of concepts with its order relation precomputed.
/// Elements are identified by position, so a list holding the same concept
/// twice is a (broken) preorder and the axiom checks will say so.
class FiniteSpace {
 public:
  using Row = boost::dynamic_bitset<std::uint64_t>;

  FiniteSpace(SchemaPtr schema, std::vector<Concept> concepts);

  const SchemaPtr& schema_ptr() const noexcept { return schema_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  const Concept& at(std::size_t i) const { return concepts_.at(i); }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  /// {j | i <= j} and {j | j <= i}.
  const Row& upset(std::size_t i) const { return up_[i]; }
  const Row& downset(std::size_t i) const { return down_[i]; }

  std::optional<std::size_t> index_of(const Concept& c) const;

 private:
  SchemaPtr schema_;
  std::vector<Concept> concepts_;
  std::vector<Row> up_;
  std::vector<Row> down_;
};

/// Every concept over a schema whose domains are all finite (discrete,
/// disjunctive, partition), in odometer order: feature 0 varies slowest,
/// "absent" precedes the values, values follow the declared order
/// (disjunctive subsets by increasing bitmask). Throws InfiniteDomain.
FiniteSpace enumerate(SchemaPtr schema);

/// Exhaustive bound search. Return the index of the greatest lower / least
/// upper bound of {i, j}, or nullopt when the bound set has no extremum.
std::optional<std::size_t> greatest_lower_bound(const FiniteSpace& space, std::size_t i,
                                                std::size_t j);
std::optional<std::size_t> least_upper_bound(const FiniteSpace& space, std::size_t i,
                                             std::size_t j);

/// Throws NotInSpace for concepts outside the space, NoGreatestLowerBound
/// when the lower-bound set has no greatest element.
Concept oracle_meet(const FiniteSpace& space, const Concept& c, const Concept& d);
MeetJoinResult oracle_join(const FiniteSpace& space, const Concept& c, const Concept& d);

/// Fully specified: every feature present with an atomic value.
bool is_fully_specified(const Concept& c);

struct AxiomVerdict {
  bool holds = true;
  std::vector<std::size_t> counterexample;  ///< element indices; empty iff holds
};

struct CheckOptions {
  /// Spaces up to this size get exhaustive chain enumeration...
  std::size_t exhaustive_limit = 10'000;
  /// ...as long as they have at most this many maximal chains.
  std::uint64_t chain_budget = 200'000;
  /// Number of random maximal chains drawn otherwise.
  std::size_t sampled_chains = 2'000;
  std::uint64_t seed = 0x5eed'c0ffee;
};

struct CheckReport {
  AxiomVerdict reflexive;
  AxiomVerdict antisymmetric;
  AxiomVerdict transitive;
  bool has_bottom = false;
  std::optional<std::size_t> bottom;
  bool is_meet_semilattice = false;
  AxiomVerdict meets;  ///< first pair without a greatest lower bound
  bool join_total = false;
  std::vector<std::size_t> maximal_elements;
  bool maximal_are_fully_specified = false;
  bool cpo_chain_check = false;
  AxiomVerdict chains;  ///< first chain prefix without a least upper bound
  std::uint64_t maximal_chain_count = 0;  ///< saturates at UINT64_MAX
  std::size_t chains_checked = 0;
  bool chains_sampled = false;

  /// Poset axioms, bottom, chain completeness and maximal = fully specified.
  bool is_cpo() const noexcept;
};

CheckReport check_axioms(const FiniteSpace& space, const CheckOptions& options = {});

/// Covering pairs (lesser, greater), sorted.
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(const FiniteSpace& space);

/// Graphviz rendering of the covering relation, lesser elements at the
/// bottom, one rank per number of specified features.
std::string hasse_export(const FiniteSpace& space);

}  // namespace conlat
