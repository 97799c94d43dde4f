#pragma once

#include <cstddef>
#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace sing {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

/// Finite quiver with named vertices and arrows.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Convenience: arrows given by vertex names.
  static Quiver from_names(std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  VertexId vertex(const std::string& name) const;
  ArrowId arrow_id(const std::string& name) const;

  const std::vector<ArrowId>& arrows_out(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& arrows_in(VertexId v) const { return in_.at(v); }
  bool is_sink(VertexId v) const { return out_.at(v).empty(); }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_.size() == b.arrows_.size() &&
           std::equal(a.arrows_.begin(), a.arrows_.end(), b.arrows_.begin(), [](const Arrow& x, const Arrow& y) {
             return x.name == y.name && x.source == y.source && x.target == y.target;
           });
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

/// A path in application order: arrows[0] is applied first.  The trivial
/// path at a vertex has no arrows.
struct Path {
  VertexId source = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  VertexId target(const Quiver& q) const { return arrows.empty() ? source : q.arrow(arrows.back()).target; }
  /// `this` followed by `a` (that is, a·this).
  Path then(ArrowId a) const;
  std::string describe(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Composability check along the arrow list.
bool is_path(const Quiver& q, VertexId source, const std::vector<ArrowId>& arrows);

}  // namespace sing
