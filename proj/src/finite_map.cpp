#include "netred/finite_map.hpp"

#include <algorithm>

namespace netred {

namespace {

void require_same_space(const SetPtr& a, const SetPtr& b, const char* what) {
  if (!same_set(a, b))
    throw Error(Errc::SpaceMismatch, std::string(what) + ": '" + a->name() +
                                         "' vs '" + b->name() + "'");
}

}  // namespace

FiniteMap FiniteMap::make(
    SetPtr domain, SetPtr codomain,
    const std::vector<std::pair<std::string, std::string>>& assignments) {
  std::vector<int32_t> table(static_cast<size_t>(domain->size()), -1);
  for (const auto& [u, x] : assignments) {
    int ui = domain->find(u);
    if (ui < 0)
      throw Error(Errc::DanglingElement,
                  "no element '" + u + "' in domain '" + domain->name() + "'");
    int xi = codomain->find(x);
    if (xi < 0)
      throw Error(Errc::DanglingElement, "no element '" + x +
                                             "' in codomain '" +
                                             codomain->name() + "'");
    if (table[static_cast<size_t>(ui)] >= 0)
      throw Error(Errc::NonTotal, "element '" + u + "' assigned twice");
    table[static_cast<size_t>(ui)] = xi;
  }
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0)
      throw Error(Errc::NonTotal,
                  "element '" + domain->id(static_cast<int>(i)) + "' unassigned");
  }
  return FiniteMap(std::move(domain), std::move(codomain), std::move(table));
}

FiniteMap FiniteMap::from_table(SetPtr domain, SetPtr codomain,
                                std::vector<int32_t> table) {
  if (table.size() != static_cast<size_t>(domain->size()))
    throw Error(Errc::NonTotal, "table size " + std::to_string(table.size()) +
                                    " for domain of size " +
                                    std::to_string(domain->size()));
  for (int32_t v : table) {
    if (v < 0 || v >= codomain->size())
      throw Error(Errc::DanglingElement,
                  "table value outside codomain '" + codomain->name() + "'");
  }
  return FiniteMap(std::move(domain), std::move(codomain), std::move(table));
}

FiniteMap FiniteMap::identity(SetPtr space) {
  std::vector<int32_t> table(static_cast<size_t>(space->size()));
  for (size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int32_t>(i);
  return FiniteMap(space, space, std::move(table));
}

const std::string& FiniteMap::apply(std::string_view u) const {
  int ui = domain_->find(u);
  if (ui < 0)
    throw Error(Errc::OutOfDomain, "element '" + std::string(u) +
                                       "' not in domain '" + domain_->name() +
                                       "'");
  return codomain_->id(table_[static_cast<size_t>(ui)]);
}

bool FiniteMap::operator==(const FiniteMap& other) const {
  return same_set(domain_, other.domain_) &&
         same_set(codomain_, other.codomain_) && table_ == other.table_;
}

FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner) {
  require_same_space(inner.codomain(), outer.domain(),
                     "compose: inner codomain must equal outer domain");
  std::vector<int32_t> table(inner.table().begin(), inner.table().end());
  for (auto& v : table) v = outer.apply_ix(v);
  return FiniteMap::from_table(inner.domain(), outer.codomain(),
                               std::move(table));
}

SetPtr preimage(const FiniteMap& f, std::string_view x) {
  int xi = f.codomain()->find(x);
  if (xi < 0)
    throw Error(Errc::OutOfCodomain, "element '" + std::string(x) +
                                         "' not in codomain '" +
                                         f.codomain()->name() + "'");
  std::vector<std::string> elems;
  for (int u = 0; u < f.domain()->size(); ++u)
    if (f.apply_ix(u) == xi) elems.push_back(f.domain()->id(u));
  return make_set(f.domain()->name() + "/" + std::string(x), std::move(elems));
}

Partition fibers(const FiniteMap& f) {
  std::vector<std::vector<std::string>> buckets(
      static_cast<size_t>(f.codomain()->size()));
  for (int u = 0; u < f.domain()->size(); ++u)
    buckets[static_cast<size_t>(f.apply_ix(u))].push_back(f.domain()->id(u));

  Partition part;
  for (int x = 0; x < f.codomain()->size(); ++x) {
    auto& bucket = buckets[static_cast<size_t>(x)];
    if (bucket.empty()) continue;
    const std::string& xid = f.codomain()->id(x);
    part.blocks.push_back(
        {xid, make_set(f.domain()->name() + "/" + xid, std::move(bucket))});
  }
  return part;
}

FiniteMap product_map(const FiniteMap& f, const FiniteMap& g) {
  SetPtr dom = product_space({f.domain(), g.domain()});
  SetPtr cod = product_space({f.codomain(), g.codomain()});
  const int gn = g.domain()->size();
  const int gc = g.codomain()->size();
  std::vector<int32_t> table(static_cast<size_t>(dom->size()));
  for (int u = 0; u < f.domain()->size(); ++u) {
    for (int v = 0; v < gn; ++v) {
      table[static_cast<size_t>(u) * gn + v] =
          f.apply_ix(u) * gc + g.apply_ix(v);
    }
  }
  return FiniteMap::from_table(std::move(dom), std::move(cod),
                               std::move(table));
}

FiniteMap fork(const FiniteMap& f, const FiniteMap& g) {
  require_same_space(f.domain(), g.domain(), "fork: domains must be equal");
  SetPtr cod = product_space({f.codomain(), g.codomain()});
  const int gc = g.codomain()->size();
  std::vector<int32_t> table(static_cast<size_t>(f.domain()->size()));
  for (int u = 0; u < f.domain()->size(); ++u)
    table[static_cast<size_t>(u)] = f.apply_ix(u) * gc + g.apply_ix(u);
  return FiniteMap::from_table(f.domain(), std::move(cod), std::move(table));
}

bool is_injective(const FiniteMap& f) {
  std::vector<char> seen(static_cast<size_t>(f.codomain()->size()), 0);
  for (int32_t v : f.table()) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool is_surjective(const FiniteMap& f) {
  std::vector<char> seen(static_cast<size_t>(f.codomain()->size()), 0);
  for (int32_t v : f.table()) seen[static_cast<size_t>(v)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_bijective(const FiniteMap& f) {
  return f.domain()->size() == f.codomain()->size() && is_injective(f);
}

}  // namespace netred
