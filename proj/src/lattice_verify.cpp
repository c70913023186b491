#include "conlat/lattice_verify.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "conlat/format.hpp"
#include "conlat/order.hpp"

namespace conlat {

namespace {

using Row = FiniteSpace::Row;

constexpr std::size_t kMaxEnumerated = std::size_t{1} << 22;

template <class F>
void for_each_bit(const Row& row, F&& f) {
  for (auto i = row.find_first(); i != Row::npos; i = row.find_next(i)) f(i);
}

std::vector<std::optional<Property>> options_for(const Feature& feature) {
  std::vector<std::optional<Property>> out{std::nullopt};
  if (const auto* d = std::get_if<DiscreteSymbols>(&feature.domain)) {
    for (const auto& s : d->symbols) out.emplace_back(Symbol{s});
  } else if (const auto* d = std::get_if<DiscreteDisjunctive>(&feature.domain)) {
    if (d->symbols.size() >= 20) {
      throw Error(ErrorCode::ConfigError, "disjunctive domain of '" + feature.name +
                                              "' is too large to enumerate");
    }
    const std::size_t subsets = std::size_t{1} << d->symbols.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      SymbolSet set;
      for (std::size_t b = 0; b < d->symbols.size(); ++b) {
        if (mask & (std::size_t{1} << b)) set.values.push_back(d->symbols[b]);
      }
      out.emplace_back(std::move(set));
    }
  } else if (const auto* d = std::get_if<Partition>(&feature.domain)) {
    for (std::size_t b = 0; b < d->bucket_count(); ++b) out.emplace_back(Bucket{b});
  } else {
    throw Error(ErrorCode::InfiniteDomain, "feature '" + feature.name + "' has an infinite '" +
                                               std::string(domain_kind(feature.domain)) +
                                               "' domain");
  }
  return out;
}

// Strict cover rows: j covers i iff i < j with nothing strictly between.
std::vector<std::vector<std::size_t>> upper_covers(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<Row> strict_up(n);
  std::vector<Row> strict_down(n);
  for (std::size_t i = 0; i < n; ++i) {
    strict_up[i] = space.upset(i) - space.downset(i);
    strict_down[i] = space.downset(i) - space.upset(i);
  }
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(strict_up[i], [&](std::size_t j) {
      if (!strict_up[i].intersects(strict_down[j])) covers[i].push_back(j);
    });
  }
  return covers;
}

bool has_least(const FiniteSpace& space, const Row& bounds, std::size_t hint) {
  if (bounds.none()) return false;
  if (bounds.test(hint) && bounds.is_subset_of(space.upset(hint))) return true;
  for (auto u = bounds.find_first(); u != Row::npos; u = bounds.find_next(u)) {
    if (bounds.is_subset_of(space.upset(u))) return true;
  }
  return false;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                          : a + b;
}

class ChainChecker {
 public:
  ChainChecker(const FiniteSpace& space, const std::vector<std::vector<std::size_t>>& covers)
      : space_(space), covers_(covers) {}

  // Checks every prefix of the chain ending in `path`; false on failure.
  bool extend(std::vector<std::size_t>& path, std::vector<Row>& bounds, std::size_t next) {
    Row ub = bounds.empty() ? space_.upset(next) : (bounds.back() & space_.upset(next));
    path.push_back(next);
    bounds.push_back(std::move(ub));
    if (!has_least(space_, bounds.back(), next)) {
      failure_ = path;
      return false;
    }
    return true;
  }

  bool exhaustive(std::size_t start) {
    std::vector<std::size_t> path;
    std::vector<Row> bounds;
    return dfs(path, bounds, start);
  }

  bool sample(std::size_t start, std::mt19937_64& rng) {
    std::vector<std::size_t> path;
    std::vector<Row> bounds;
    std::size_t at = start;
    if (!extend(path, bounds, at)) return false;
    while (!covers_[at].empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, covers_[at].size() - 1);
      at = covers_[at][pick(rng)];
      if (!extend(path, bounds, at)) return false;
    }
    ++checked_;
    return true;
  }

  std::size_t checked() const noexcept { return checked_; }
  const std::vector<std::size_t>& failure() const noexcept { return failure_; }

 private:
  bool dfs(std::vector<std::size_t>& path, std::vector<Row>& bounds, std::size_t at) {
    if (path.size() > space_.size()) {  // only reachable when the relation has cycles
      failure_ = path;
      return false;
    }
    if (!extend(path, bounds, at)) return false;
    if (covers_[at].empty()) {
      ++checked_;
    } else {
      for (std::size_t next : covers_[at]) {
        if (!dfs(path, bounds, next)) return false;
      }
    }
    path.pop_back();
    bounds.pop_back();
    return true;
  }

  const FiniteSpace& space_;
  const std::vector<std::vector<std::size_t>>& covers_;
  std::vector<std::size_t> failure_;
  std::size_t checked_ = 0;
};

bool is_atomic(const Property& p) {
  if (const auto* s = std::get_if<SymbolSet>(&p)) return s->values.size() == 1;
  if (const auto* s = std::get_if<PointSet>(&p)) return s->values.size() == 1;
  if (const auto* iv = std::get_if<Interval>(&p)) return iv->lo == iv->hi;
  return std::holds_alternative<Symbol>(p) || std::holds_alternative<Point>(p) ||
         std::holds_alternative<Bucket>(p);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace(SchemaPtr schema, std::vector<Concept> concepts)
    : schema_(std::move(schema)), concepts_(std::move(concepts)) {
  const std::size_t n = concepts_.size();
  for (const auto& c : concepts_) require_same_schema(*schema_, c.schema());
  up_.assign(n, Row(n));
  down_.assign(n, Row(n));

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n / 64));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [this, w, workers, n] {
      for (std::size_t i = w; i < n; i += workers) {
        for (std::size_t j = 0; j < n; ++j) {
          if (subsumes(concepts_[i], concepts_[j])) up_[i].set(j);
        }
      }
    }));
  }
  for (auto& job : jobs) job.get();
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up_[i], [&](std::size_t j) { down_[j].set(i); });
  }
}

std::optional<std::size_t> FiniteSpace::index_of(const Concept& c) const {
  if (!same_schema(*schema_, c.schema())) return std::nullopt;
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (concepts_[i] == c) return i;
  }
  return std::nullopt;
}

FiniteSpace enumerate(SchemaPtr schema) {
  std::vector<std::vector<std::optional<Property>>> options;
  std::size_t total = 1;
  for (const auto& feature : schema->features()) {
    options.push_back(options_for(feature));
    if (total > kMaxEnumerated / options.back().size()) {
      throw Error(ErrorCode::ConfigError, "space has more than " +
                                              std::to_string(kMaxEnumerated) + " concepts");
    }
    total *= options.back().size();
  }

  std::vector<Concept> concepts;
  concepts.reserve(total);
  std::vector<std::size_t> digits(options.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    Concept::Entries entries;
    for (FeatureId f = 0; f < options.size(); ++f) {
      if (const auto& p = options[f][digits[f]]) entries.emplace(f, *p);
    }
    concepts.emplace_back(schema, entries);
    for (std::size_t f = options.size(); f-- > 0;) {
      if (++digits[f] < options[f].size()) break;
      digits[f] = 0;
    }
  }
  return FiniteSpace(std::move(schema), std::move(concepts));
}

std::optional<std::size_t> greatest_lower_bound(const FiniteSpace& space, std::size_t i,
                                                std::size_t j) {
  const Row lower = space.downset(i) & space.downset(j);
  for (auto g = lower.find_first(); g != Row::npos; g = lower.find_next(g)) {
    if (lower.is_subset_of(space.downset(g))) return g;
  }
  return std::nullopt;
}

std::optional<std::size_t> least_upper_bound(const FiniteSpace& space, std::size_t i,
                                             std::size_t j) {
  const Row upper = space.upset(i) & space.upset(j);
  for (auto u = upper.find_first(); u != Row::npos; u = upper.find_next(u)) {
    if (upper.is_subset_of(space.upset(u))) return u;
  }
  return std::nullopt;
}

namespace {

std::pair<std::size_t, std::size_t> locate(const FiniteSpace& space, const Concept& c,
                                           const Concept& d) {
  const auto i = space.index_of(c);
  const auto j = space.index_of(d);
  if (!i || !j) throw Error(ErrorCode::NotInSpace, "concept is not an element of the space");
  return {*i, *j};
}

}  // namespace

Concept oracle_meet(const FiniteSpace& space, const Concept& c, const Concept& d) {
  const auto [i, j] = locate(space, c, d);
  const auto g = greatest_lower_bound(space, i, j);
  if (!g) throw Error(ErrorCode::NoGreatestLowerBound, "lower bounds have no greatest element");
  return space.at(*g);
}

MeetJoinResult oracle_join(const FiniteSpace& space, const Concept& c, const Concept& d) {
  const auto [i, j] = locate(space, c, d);
  const auto u = least_upper_bound(space, i, j);
  if (!u) return std::nullopt;
  return space.at(*u);
}

bool is_fully_specified(const Concept& c) {
  if (!c.is_total()) return false;
  return std::all_of(c.entries().begin(), c.entries().end(),
                     [](const auto& entry) { return is_atomic(entry.second); });
}

bool CheckReport::is_cpo() const noexcept {
  return reflexive.holds && antisymmetric.holds && transitive.holds && has_bottom &&
         cpo_chain_check && maximal_are_fully_specified;
}

CheckReport check_axioms(const FiniteSpace& space, const CheckOptions& options) {
  const std::size_t n = space.size();
  CheckReport report;

  for (std::size_t i = 0; i < n && report.reflexive.holds; ++i) {
    if (!space.leq(i, i)) report.reflexive = {false, {i}};
  }
  for (std::size_t i = 0; i < n && report.antisymmetric.holds; ++i) {
    const Row both = space.upset(i) & space.downset(i);
    for_each_bit(both, [&](std::size_t j) {
      if (j != i && report.antisymmetric.holds) report.antisymmetric = {false, {i, j}};
    });
  }
  for (std::size_t i = 0; i < n && report.transitive.holds; ++i) {
    for_each_bit(space.upset(i), [&](std::size_t j) {
      if (!report.transitive.holds || space.upset(j).is_subset_of(space.upset(i))) return;
      const Row missing = space.upset(j) - space.upset(i);
      report.transitive = {false, {i, j, missing.find_first()}};
    });
  }

  for (std::size_t b = 0; b < n; ++b) {
    if (space.upset(b).count() == n) {
      report.has_bottom = true;
      report.bottom = b;
      break;
    }
  }

  report.is_meet_semilattice = true;
  report.join_total = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (report.is_meet_semilattice && !greatest_lower_bound(space, i, j)) {
        report.is_meet_semilattice = false;
        report.meets = {false, {i, j}};
      }
      if (report.join_total && !least_upper_bound(space, i, j)) report.join_total = false;
    }
  }

  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < n; ++i) {
    if (space.upset(i).is_subset_of(space.downset(i))) report.maximal_elements.push_back(i);
    if (space.downset(i).is_subset_of(space.upset(i))) minimal.push_back(i);
  }
  {
    std::vector<std::size_t> full;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_fully_specified(space.at(i))) full.push_back(i);
    }
    report.maximal_are_fully_specified = full == report.maximal_elements;
  }

  // Chain completeness. The empty chain needs a bottom; every other chain
  // is checked through the prefixes of the maximal chains containing it.
  const auto covers = upper_covers(space);
  std::vector<std::uint64_t> chains_from(n, 0);
  {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> above(n);
    for (std::size_t i = 0; i < n; ++i) above[i] = (space.upset(i) - space.downset(i)).count();
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return above[a] < above[b]; });
    for (std::size_t i : order) {
      if (covers[i].empty()) {
        chains_from[i] = 1;
        continue;
      }
      for (std::size_t j : covers[i]) chains_from[i] = saturating_add(chains_from[i], chains_from[j]);
    }
    for (std::size_t m : minimal) {
      report.maximal_chain_count = saturating_add(report.maximal_chain_count, chains_from[m]);
    }
  }

  ChainChecker checker(space, covers);
  bool chains_ok = true;
  if (minimal.empty() && n > 0) {
    chains_ok = false;  // an infinite descending cycle; nothing to start from
  } else if (n <= options.exhaustive_limit && report.maximal_chain_count <= options.chain_budget) {
    for (std::size_t m : minimal) {
      if (!checker.exhaustive(m)) {
        chains_ok = false;
        break;
      }
    }
  } else {
    report.chains_sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, minimal.size() - 1);
    for (std::size_t k = 0; k < options.sampled_chains; ++k) {
      if (!checker.sample(minimal[pick(rng)], rng)) {
        chains_ok = false;
        break;
      }
    }
  }
  report.chains_checked = checker.checked();
  if (!chains_ok) report.chains = {false, checker.failure()};
  report.cpo_chain_check = report.has_bottom && chains_ok;
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_edges(const FiniteSpace& space) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto covers = upper_covers(space);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j : covers[i]) edges.emplace_back(i, j);
  }
  return edges;
}

std::string hasse_export(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = to_string(space.at(i));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = space.at(a).size();
    const auto rb = space.at(b).size();
    return ra != rb ? ra < rb : labels[a] < labels[b];
  });
  std::vector<std::size_t> name(n);
  for (std::size_t k = 0; k < n; ++k) name[order[k]] = k;

  std::ostringstream dot;
  dot << "digraph hasse {\n";
  dot << "  rankdir=BT;\n";
  dot << "  node [shape=box];\n";
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    dot << "  n" << k << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
    ranks[space.at(i).size()].push_back(k);
  }
  for (const auto& [rank, members] : ranks) {
    dot << "  { rank=same;";
    for (std::size_t k : members) dot << " n" << k << ";";
    dot << " }\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : covering_edges(space)) edges.emplace_back(name[lo], name[hi]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges) dot << "  n" << lo << " -> n" << hi << ";\n";
  dot << "}\n";
  return dot.str();
}

}  // namespace conlat
