#ifndef NETRED_FINITE_MAP_HPP
#define NETRED_FINITE_MAP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netred/finite_set.hpp"

namespace netred {

// A total single-valued assignment between two finite sets.  The table maps
// every domain index to one codomain index; values are immutable after
// construction.
class FiniteMap {
public:
  // Builds a map from (domain element, codomain element) id pairs.
  // Throws NonTotal when a domain element is unassigned or doubly assigned,
  // DanglingElement when a referenced id is unknown.
  static FiniteMap make(
      SetPtr domain, SetPtr codomain,
      const std::vector<std::pair<std::string, std::string>>& assignments);

  // Builds a map directly from an index table (one codomain index per domain
  // element, in canonical domain order).
  static FiniteMap from_table(SetPtr domain, SetPtr codomain,
                              std::vector<int32_t> table);

  static FiniteMap identity(SetPtr space);

  const SetPtr& domain() const { return domain_; }
  const SetPtr& codomain() const { return codomain_; }
  std::span<const int32_t> table() const { return table_; }

  // Application by element id; throws OutOfDomain for ids outside the domain.
  const std::string& apply(std::string_view u) const;
  int32_t apply_ix(int32_t u) const { return table_[static_cast<size_t>(u)]; }

  bool operator==(const FiniteMap& other) const;
  bool operator!=(const FiniteMap& other) const { return !(*this == other); }

private:
  FiniteMap(SetPtr domain, SetPtr codomain, std::vector<int32_t> table)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        table_(std::move(table)) {}

  SetPtr domain_;
  SetPtr codomain_;
  std::vector<int32_t> table_;
};

// One block per image element; blocks partition the preimaged part of the
// domain and are ordered by codomain canonical order.
struct PartitionBlock {
  std::string value;  // codomain element id
  SetPtr block;       // the fiber, as a subset in canonical domain order
};

struct Partition {
  std::vector<PartitionBlock> blocks;
};

// result(u) = outer(inner(u)); requires inner.codomain == outer.domain
// (set identity, not mere isomorphism).  Throws SpaceMismatch.
FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner);

// {u : f(u) = x}, possibly empty.  Throws OutOfCodomain when x is not a
// codomain element.
SetPtr preimage(const FiniteMap& f, std::string_view x);

Partition fibers(const FiniteMap& f);

// (u, u') ↦ (f(u), g(u')) over the product of the two domains.
FiniteMap product_map(const FiniteMap& f, const FiniteMap& g);

// u ↦ (f(u), g(u)) on a shared domain.  Throws SpaceMismatch when the
// domains differ.
FiniteMap fork(const FiniteMap& f, const FiniteMap& g);

bool is_injective(const FiniteMap& f);
bool is_surjective(const FiniteMap& f);
bool is_bijective(const FiniteMap& f);

}  // namespace netred

#endif
