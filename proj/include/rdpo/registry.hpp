#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rdpo {

/// Index of a named reward dimension within a DimensionRegistry.
/// Comparisons are by registered index, so two ids are only comparable
/// when they come from the same registry.
struct RewardDimensionId {
  std::uint32_t index = 0;
  friend auto operator<=>(const RewardDimensionId&, const RewardDimensionId&) = default;
};

/// Fixed set of reward dimension names known to a pipeline.  Built once at
/// construction time; any dimension name not present here is invalid input.
class DimensionRegistry {
 public:
  DimensionRegistry() = default;

  explicit DimensionRegistry(const std::vector<std::string>& names) {
    for (const auto& n : names) add(n);
  }

  RewardDimensionId add(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("dimension name must be non-empty");
    if (index_.contains(name))
      throw std::invalid_argument("duplicate dimension name: " + name);
    const auto id = RewardDimensionId{static_cast<std::uint32_t>(names_.size())};
    index_.emplace(name, id.index);
    names_.push_back(name);
    return id;
  }

  RewardDimensionId find_or_add(const std::string& name) {
    if (auto id = find(name)) return *id;
    return add(name);
  }

  std::optional<RewardDimensionId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return RewardDimensionId{it->second};
  }

  RewardDimensionId require(const std::string& name) const {
    if (auto id = find(name)) return *id;
    throw std::invalid_argument("unknown reward dimension: " + name);
  }

  const std::string& name(RewardDimensionId id) const {
    if (id.index >= names_.size())
      throw std::out_of_range("dimension id out of range");
    return names_[id.index];
  }

  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Canonical ordered set of reward dimensions: the active reward set of a
/// task.  Construction sorts by registry index and rejects duplicates, so
/// keys built from any permutation of the same dimensions compare equal.
class SubspaceKey {
 public:
  SubspaceKey() = default;

  static SubspaceKey of(std::vector<RewardDimensionId> dims) {
    if (dims.empty()) throw std::invalid_argument("subspace must be non-empty");
    std::sort(dims.begin(), dims.end());
    if (std::adjacent_find(dims.begin(), dims.end()) != dims.end())
      throw std::invalid_argument("subspace has duplicate dimensions");
    SubspaceKey key;
    key.dims_ = std::move(dims);
    return key;
  }

  static SubspaceKey of_names(const DimensionRegistry& reg,
                              const std::vector<std::string>& names) {
    std::vector<RewardDimensionId> ids;
    ids.reserve(names.size());
    for (const auto& n : names) ids.push_back(reg.require(n));
    return of(std::move(ids));
  }

  std::span<const RewardDimensionId> dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  bool empty() const { return dims_.empty(); }

  bool contains(RewardDimensionId id) const {
    return std::binary_search(dims_.begin(), dims_.end(), id);
  }

  /// Column position of a dimension within this subspace, if present.
  std::optional<std::size_t> position(RewardDimensionId id) const {
    auto it = std::lower_bound(dims_.begin(), dims_.end(), id);
    if (it == dims_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - dims_.begin());
  }

  std::vector<std::string> names(const DimensionRegistry& reg) const {
    std::vector<std::string> out;
    out.reserve(dims_.size());
    for (auto d : dims_) out.push_back(reg.name(d));
    return out;
  }

  /// "math+length" style label, dimensions in canonical order.
  std::string label(const DimensionRegistry& reg) const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) out += '+';
      out += reg.name(dims_[i]);
    }
    return out;
  }

  friend auto operator<=>(const SubspaceKey&, const SubspaceKey&) = default;

 private:
  std::vector<RewardDimensionId> dims_;
};

}  // namespace rdpo
