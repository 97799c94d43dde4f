#include "sing/quiver.hpp"

#include <set>
#include <tuple>

#include "sing/error.hpp"

namespace sing {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw Error(ErrorCode::SchemaError, "duplicate vertex name");
  std::set<std::string> seen_arrows;
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (!seen_arrows.insert(ar.name).second) throw Error(ErrorCode::SchemaError, "duplicate arrow name " + ar.name);
    if (ar.source >= vertices_.size() || ar.target >= vertices_.size())
      throw Error(ErrorCode::SchemaError, "arrow " + ar.name + " has an unknown endpoint");
    out_[ar.source].push_back(a);
    in_[ar.target].push_back(a);
  }
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  auto index = [&](const std::string& n) -> VertexId {
    for (VertexId v = 0; v < vertices.size(); ++v)
      if (vertices[v] == n) return v;
    throw Error(ErrorCode::SchemaError, "unknown vertex " + n);
  };
  std::vector<Arrow> list;
  for (const auto& [name, from, to] : arrows) list.push_back({name, index(from), index(to)});
  return Quiver(std::move(vertices), std::move(list));
}

std::optional<VertexId> Quiver::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == name) return v;
  return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
  for (ArrowId a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

VertexId Quiver::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::SchemaError, "unknown vertex " + name);
}

ArrowId Quiver::arrow_id(const std::string& name) const {
  if (auto a = find_arrow(name)) return *a;
  throw Error(ErrorCode::SchemaError, "unknown arrow " + name);
}

Path Path::then(ArrowId a) const {
  Path p = *this;
  p.arrows.push_back(a);
  return p;
}

std::string Path::describe(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertex_name(source);
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) s += q.arrow(*it).name;
  return s;
}

bool is_path(const Quiver& q, VertexId source, const std::vector<ArrowId>& arrows) {
  VertexId at = source;
  for (ArrowId a : arrows) {
    if (a >= q.arrow_count() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return true;
}

}  // namespace sing
