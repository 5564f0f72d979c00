#ifndef NETRED_FINITE_SET_HPP
#define NETRED_FINITE_SET_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netred/errors.hpp"

namespace netred {

class FiniteSet;
using SetPtr = std::shared_ptr<const FiniteSet>;

// A named universe of discrete values.  Element order is the canonical
// order used everywhere for tie-breaking and serialization.
class FiniteSet {
public:
  FiniteSet(std::string name, std::vector<std::string> elements);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }

  const std::string& id(int index) const;
  std::span<const std::string> ids() const { return elements_; }

  // Index of an element id, or -1 if absent.
  int find(std::string_view id) const;
  // Index of an element id; throws DanglingElement if absent.
  int index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) >= 0; }

  // Component sets when this set was built by product_space; empty otherwise.
  const std::vector<SetPtr>& factors() const { return factors_; }
  bool is_product() const { return !factors_.empty(); }

  // Set identity: same name and same element list in the same order.
  bool operator==(const FiniteSet& other) const {
    return name_ == other.name_ && elements_ == other.elements_;
  }
  bool operator!=(const FiniteSet& other) const { return !(*this == other); }

  friend SetPtr product_space(const std::vector<SetPtr>& parts);

private:
  std::string name_;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<SetPtr> factors_;
};

SetPtr make_set(std::string name, std::vector<std::string> elements);

// Cartesian product.  Elements are tuples "(a,b,...)" enumerated
// lexicographically with the first part most significant.  Requires at
// least one part.
SetPtr product_space(const std::vector<SetPtr>& parts);

// Mixed-radix helpers tying tuple indices to product_space enumeration order.
int64_t tuple_index(std::span<const int> component_values,
                    std::span<const int> component_sizes);
void tuple_components(int64_t index, std::span<const int> component_sizes,
                      std::span<int> out_values);

// True when the two handles denote the identical set (pointer or structural).
bool same_set(const SetPtr& a, const SetPtr& b);

}  // namespace netred

#endif
