#include "netred/finite_set.hpp"

#include <algorithm>
#include <sstream>

namespace netred {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonTotal: return "NonTotal";
    case Errc::DanglingElement: return "DanglingElement";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::OutOfCodomain: return "OutOfCodomain";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::Multivalued: return "Multivalued";
    case Errc::TranscendentInput: return "TranscendentInput";
    case Errc::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case Errc::CyclicNetwork: return "CyclicNetwork";
    case Errc::PartialAssignment: return "PartialAssignment";
    case Errc::UnsupportedTopology: return "UnsupportedTopology";
    case Errc::StalePair: return "StalePair";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

FiniteSet::FiniteSet(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].empty())
      throw Error(Errc::ValidationError,
                  "empty element id in set '" + name_ + "'");
    auto [it, inserted] = index_.emplace(elements_[i], static_cast<int>(i));
    if (!inserted)
      throw Error(Errc::ValidationError, "duplicate element '" + elements_[i] +
                                             "' in set '" + name_ + "'");
  }
}

const std::string& FiniteSet::id(int index) const {
  if (index < 0 || index >= size())
    throw Error(Errc::DanglingElement,
                "index " + std::to_string(index) + " outside set '" + name_ + "'");
  return elements_[static_cast<size_t>(index)];
}

int FiniteSet::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

int FiniteSet::index_of(std::string_view id) const {
  int ix = find(id);
  if (ix < 0)
    throw Error(Errc::DanglingElement,
                "no element '" + std::string(id) + "' in set '" + name_ + "'");
  return ix;
}

SetPtr make_set(std::string name, std::vector<std::string> elements) {
  return std::make_shared<FiniteSet>(std::move(name), std::move(elements));
}

SetPtr product_space(const std::vector<SetPtr>& parts) {
  if (parts.empty())
    throw Error(Errc::ValidationError, "product_space needs at least one part");

  std::string name = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) name += "×";
    name += parts[i]->name();
  }
  name += ")";

  size_t total = 1;
  for (const auto& p : parts) total *= static_cast<size_t>(p->size());

  std::vector<std::string> elems;
  elems.reserve(total);
  if (total > 0) {
    std::vector<int> digits(parts.size(), 0);
    bool more = true;
    while (more) {
      std::string id = "(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) id += ",";
        id += parts[i]->id(digits[i]);
      }
      id += ")";
      elems.push_back(std::move(id));
      // mixed-radix advance, last part fastest
      more = false;
      for (size_t k = parts.size(); k-- > 0;) {
        if (++digits[k] < parts[k]->size()) {
          more = true;
          break;
        }
        digits[k] = 0;
      }
    }
  }
  auto set = std::make_shared<FiniteSet>(std::move(name), std::move(elems));
  set->factors_ = parts;
  return set;
}

int64_t tuple_index(std::span<const int> component_values,
                    std::span<const int> component_sizes) {
  int64_t ix = 0;
  for (size_t i = 0; i < component_sizes.size(); ++i)
    ix = ix * component_sizes[i] + component_values[i];
  return ix;
}

void tuple_components(int64_t index, std::span<const int> component_sizes,
                      std::span<int> out_values) {
  for (size_t i = component_sizes.size(); i-- > 0;) {
    out_values[i] = static_cast<int>(index % component_sizes[i]);
    index /= component_sizes[i];
  }
}

bool same_set(const SetPtr& a, const SetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace netred
