#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "backbone/errors.hpp"

namespace backbone {

// Node ids are arbitrary non-negative integers preserved from the input;
// nothing ever renumbers them behind the caller's back.
using NodeId = int;

// An unordered pair of distinct nodes, stored normalized as (min, max).
// Comparison order is (min id, max id), which is the order separator
// searches and tie-breaks rely on.
struct NodePair {
  NodeId u{0};
  NodeId v{0};

  NodePair() = default;
  NodePair(NodeId a, NodeId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw input_error("node pair requires two distinct nodes");
  }

  bool contains(NodeId w) const { return w == u || w == v; }
  NodeId other(NodeId w) const { return w == u ? v : u; }

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

// A set of node ids kept as a strictly increasing vector.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids) : ids_(ids) { normalize(); }
  explicit NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) { normalize(); }

  bool contains(NodeId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  void insert(NodeId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  NodeSet united(const NodeSet& other) const {
    std::vector<NodeId> merged;
    merged.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(merged));
    return from_sorted(std::move(merged));
  }

  NodeSet intersect(const NodeSet& other) const {
    std::vector<NodeId> common;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(common));
    return from_sorted(std::move(common));
  }

  NodeSet minus(const NodeSet& other) const {
    std::vector<NodeId> rest;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(rest));
    return from_sorted(std::move(rest));
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<NodeId>& ids() const { return ids_; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  NodeId front() const { return ids_.front(); }
  NodeId back() const { return ids_.back(); }

  // Lexicographic order on the sorted id lists; used for deterministic
  // tie-breaking between candidate sets.
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

 private:
  static NodeSet from_sorted(std::vector<NodeId> sorted) {
    NodeSet s;
    s.ids_ = std::move(sorted);
    return s;
  }

  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<NodeId> ids_;
};

}  // namespace backbone
