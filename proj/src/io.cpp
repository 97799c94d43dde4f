#include "sing/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sing/error.hpp"

namespace sing::io {

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::SchemaError, (pointer.empty() ? "/" : pointer) + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) schema(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(pointer + "/" + key, "missing");
  return *it;
}

const std::string& as_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) schema(pointer, "expected a string");
  return j.get_ref<const std::string&>();
}

std::size_t as_nat(const json& j, const std::string& pointer) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schema(pointer, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& as_array(const json& j, const std::string& pointer) {
  if (!j.is_array()) schema(pointer, "expected an array");
  return j;
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& pointer) {
  const std::string& s = as_string(j, pointer);
  try {
    return Scalar::parse(f, s);
  } catch (const Error& e) {
    schema(pointer, std::string("bad scalar: ") + e.what());
  }
}

Field parse_field(const json& j) {
  const std::string& kind = as_string(member(j, "kind", "/field"), "/field/kind");
  if (kind == "rational") return Field::rational();
  if (kind != "prime") schema("/field/kind", "expected \"prime\" or \"rational\"");
  std::size_t p = as_nat(member(j, "p", "/field"), "/field/p");
  if (p > UINT32_MAX) schema("/field/p", "prime too large");
  try {
    return Field::prime(static_cast<std::uint32_t>(p));
  } catch (const Error& e) {
    schema("/field/p", e.what());
  }
}

}  // namespace

AlgebraPtr parse_algebra(const json& j) {
  if (!j.is_object()) schema("", "expected an object");
  Field f = parse_field(member(j, "field", ""));
  const json& jq = member(j, "quiver", "");
  std::vector<std::string> vertices;
  const json& jv = as_array(member(jq, "vertices", "/quiver"), "/quiver/vertices");
  for (std::size_t i = 0; i < jv.size(); ++i) vertices.push_back(as_string(jv[i], "/quiver/vertices/" + std::to_string(i)));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  const json& ja = as_array(member(jq, "arrows", "/quiver"), "/quiver/arrows");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string ptr = "/quiver/arrows/" + std::to_string(i);
    arrows.emplace_back(as_string(member(ja[i], "name", ptr), ptr + "/name"),
                        as_string(member(ja[i], "from", ptr), ptr + "/from"),
                        as_string(member(ja[i], "to", ptr), ptr + "/to"));
    for (const char* key : {"from", "to"}) {
      const std::string& v = ja[i][key].get_ref<const std::string&>();
      if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
        schema(ptr + "/" + key, "unknown vertex " + v);
    }
  }
  Quiver q;
  try {
    q = Quiver::from_names(vertices, arrows);
  } catch (const Error& e) {
    schema("/quiver", e.what());
  }

  std::vector<Relation> rels;
  auto jr_it = j.find("relations");
  if (jr_it != j.end()) {
    const json& jr = as_array(*jr_it, "/relations");
    for (std::size_t i = 0; i < jr.size(); ++i) {
      const std::string rptr = "/relations/" + std::to_string(i);
      Relation r;
      const json& terms = as_array(jr[i], rptr);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string tptr = rptr + "/" + std::to_string(k);
        PathTerm t{parse_scalar(f, member(terms[k], "coeff", tptr), tptr + "/coeff"), {}};
        const json& path = as_array(member(terms[k], "path", tptr), tptr + "/path");
        for (std::size_t a = 0; a < path.size(); ++a) {
          const std::string& name = as_string(path[a], tptr + "/path/" + std::to_string(a));
          auto id = q.find_arrow(name);
          if (!id) schema(tptr + "/path/" + std::to_string(a), "unknown arrow " + name);
          t.arrows.push_back(*id);
        }
        if (!t.arrows.empty() && !is_path(q, q.arrow(t.arrows.front()).source, t.arrows))
          throw Error(ErrorCode::RelationNotParallel, tptr + "/path: arrows do not compose");
        r.terms.push_back(std::move(t));
      }
      rels.push_back(std::move(r));
    }
  }
  return BoundAlgebra::build(f, std::move(q), std::move(rels));
}

json algebra_to_json(const BoundAlgebra& alg) {
  const Quiver& q = alg.quiver();
  json j;
  if (alg.field().is_prime())
    j["field"] = {{"kind", "prime"}, {"p", alg.field().characteristic()}};
  else
    j["field"] = {{"kind", "rational"}};
  j["quiver"]["vertices"] = q.vertices();
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"from", q.vertex_name(a.source)}, {"to", q.vertex_name(a.target)}});
  j["quiver"]["arrows"] = std::move(arrows);
  json rels = json::array();
  for (const Relation& r : alg.relations()) {
    json terms = json::array();
    for (const PathTerm& t : r.terms) {
      json path = json::array();
      for (ArrowId a : t.arrows) path.push_back(q.arrow(a).name);
      terms.push_back({{"coeff", t.coeff.to_string()}, {"path", std::move(path)}});
    }
    rels.push_back(std::move(terms));
  }
  j["relations"] = std::move(rels);
  return j;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

Matrix parse_matrix(const Field& f, const json& j, std::size_t rows, std::size_t cols, const std::string& pointer) {
  if (!j.is_array()) schema(pointer, "expected an array of rows");
  if (j.size() != rows)
    throw Error(ErrorCode::MatrixShapeMismatch,
                pointer + ": expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rptr = pointer + "/" + std::to_string(r);
    if (!j[r].is_array()) schema(rptr, "expected a row array");
    if (j[r].size() != cols)
      throw Error(ErrorCode::MatrixShapeMismatch,
                  rptr + ": expected " + std::to_string(cols) + " entries, found " + std::to_string(j[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_scalar(f, j[r][c], rptr + "/" + std::to_string(c)));
  }
  return m;
}

Representation parse_module(const AlgebraPtr& alg, const json& j) {
  if (!j.is_object()) schema("", "expected an object");
  const Quiver& q = alg->quiver();
  const json& jd = member(j, "dims", "");
  if (!jd.is_object()) schema("/dims", "expected an object keyed by vertex");
  for (auto it = jd.begin(); it != jd.end(); ++it)
    if (!q.find_vertex(it.key())) schema("/dims/" + it.key(), "unknown vertex");
  std::vector<std::size_t> dims;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const std::string& name = q.vertex_name(v);
    dims.push_back(as_nat(member(jd, name.c_str(), "/dims"), "/dims/" + name));
  }
  json empty = json::object();
  const json* ja = &empty;
  if (auto it = j.find("arrows"); it != j.end()) {
    if (!it->is_object()) schema("/arrows", "expected an object keyed by arrow");
    ja = &*it;
  }
  for (auto it = ja->begin(); it != ja->end(); ++it)
    if (!q.find_arrow(it.key())) schema("/arrows/" + it.key(), "unknown arrow");
  std::vector<Matrix> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    auto it = ja->find(ar.name);
    if (it == ja->end())
      arrows.emplace_back(alg->field(), dims[ar.target], dims[ar.source]);
    else
      arrows.push_back(parse_matrix(alg->field(), *it, dims[ar.target], dims[ar.source], "/arrows/" + ar.name));
  }
  return Representation(alg, std::move(dims), std::move(arrows));
}

json module_to_json(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  json j;
  j["dims"] = json::object();
  for (VertexId v = 0; v < q.vertex_count(); ++v) j["dims"][q.vertex_name(v)] = m.dim(v);
  j["arrows"] = json::object();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) j["arrows"][q.arrow(a).name] = matrix_to_json(m.arrow(a));
  return j;
}

json report_to_json(const ColimitReport& r) {
  json j;
  j["p0"] = r.p0;
  j["pMax"] = r.p_max;
  j["window"] = r.window;
  j["dims"] = r.dims;
  j["rankTable"] = r.rank_table;
  j["verdict"] = {{"kind", std::string(verdict_name(r.verdict.kind))},
                  {"value", r.verdict.value},
                  {"reason", r.verdict.reason}};
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, path + ": " + e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path) { return parse_algebra(read_json_file(path)); }

Representation load_module(const AlgebraPtr& alg, const std::string& path) {
  return parse_module(alg, read_json_file(path));
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sing::io
