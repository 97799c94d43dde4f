// Command-line front end: one verb per invocation, one canonical JSON report.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sing/axioms.hpp"
#include "sing/error.hpp"
#include "sing/io.hpp"
#include "sing/rsz.hpp"
#include "sing/singularity.hpp"

using namespace sing;
using io::json;

namespace {

struct Options {
  std::string verb;
  std::string algebra, source, target, out, adjacency;
  std::int64_t shift = 0;
  std::int64_t p_max = 12;
  std::size_t window = 3;
  std::size_t k_max = 8;
  std::uint64_t seed = 0;
  std::size_t k = 1;
  std::optional<std::size_t> selfinj_dim;
};

struct Outcome {
  json result;
  bool verified = true;
};

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require(const std::string& value, const char* flag, const std::string& verb) {
  if (value.empty()) throw Error(ErrorCode::SchemaError, verb + " needs " + flag);
}

json verdict_json(const Verdict& v) {
  return {{"kind", verdict_name(v.kind)}, {"value", v.value}, {"reason", v.reason}};
}

json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"from", q.vertex_name(a.source)}, {"to", q.vertex_name(a.target)}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

std::vector<std::uint64_t> dims_of(const Representation& m) {
  return {m.dims().begin(), m.dims().end()};
}

AdjacencyModel load_adjacency(const std::string& path) {
  json j = io::read_json_file(path);
  if (!j.is_object() || !j.contains("adjacency") || !j["adjacency"].is_array())
    throw Error(ErrorCode::SchemaError, "/adjacency: expected an array of rows");
  AdjacencyModel m;
  m.vertices = j["adjacency"].size();
  for (std::size_t r = 0; r < m.vertices; ++r) {
    const json& row = j["adjacency"][r];
    if (!row.is_array() || row.size() != m.vertices)
      throw Error(ErrorCode::SchemaError, "/adjacency/" + std::to_string(r) + ": expected a row of length " +
                                              std::to_string(m.vertices));
    std::vector<std::uint64_t> vals;
    for (const auto& e : row) {
      if (!e.is_number_unsigned()) throw Error(ErrorCode::SchemaError, "/adjacency/" + std::to_string(r) + ": expected naturals");
      vals.push_back(e.get<std::uint64_t>());
    }
    m.adjacency.push_back(std::move(vals));
  }
  return m;
}

Outcome run(const Options& o) {
  const std::string& verb = o.verb;
  Outcome out;
  if (verb == "axioms") {
    json suites = json::array();
    for (const auto& s : run_axioms(o.seed, o.k_max)) {
      suites.push_back({{"name", s.name}, {"cases", s.cases}, {"passed", s.passed}, {"failures", s.failures}});
      out.verified = out.verified && s.ok();
    }
    out.result = {{"suites", suites}, {"allPassed", out.verified}};
    return out;
  }

  require(o.algebra, "--algebra", verb);
  AlgebraPtr alg = io::load_algebra(o.algebra);
  auto module = [&](const std::string& path, const char* flag) {
    require(path, flag, verb);
    return share(io::load_module(alg, path));
  };

  if (verb == "sgdim") {
    RepPtr m = module(o.source, "--source"), n = module(o.target, "--target");
    out.result = {{"module", o.source},
                  {"target", o.target},
                  {"shift", o.shift},
                  {"report", io::report_to_json(sg_hom_dim({m, n, o.shift, o.p_max, o.window}))}};
  } else if (verb == "syzygy") {
    RepPtr m = module(o.source, "--source");
    RepPtr s = syzygy(m, o.k);
    out.result = {{"k", o.k}, {"module", io::module_to_json(*s)}, {"projective", is_projective(*s)}};
  } else if (verb == "stablehom") {
    RepPtr m = module(o.source, "--source"), n = module(o.target, "--target");
    StableHomSpace sp(m, n);
    out.result = {{"homDim", sp.hom_dim()}, {"stableDim", sp.dim()}};
  } else if (verb == "projdim") {
    RepPtr m = module(o.source, "--source");
    const std::size_t bound = static_cast<std::size_t>(std::max<std::int64_t>(o.p_max, 0));
    ProjDim pd = proj_dim(m, bound);
    SgZeroVerdict z = is_sg_zero(m, bound);
    static const char* names[] = {"Zero", "NonzeroCertified", "UnknownUpTo"};
    out.result = {{"projDim", pd.finite ? json(pd.value) : json(nullptr)},
                  {"bound", bound},
                  {"sgZero", {{"kind", names[static_cast<int>(z.kind)]}, {"value", z.value}, {"start", z.start}}}};
  } else if (verb == "gptest") {
    RepPtr m = module(o.source, "--source");
    GpVerdict g = gp_test(m, o.k_max, o.selfinj_dim);
    static const char* names[] = {"GP_Certified", "GP_UpToBound", "NotGP"};
    json v = {{"kind", names[static_cast<int>(g.kind)]}, {"reason", g.reason}};
    if (g.kind == GpKind::NotGP) v["witness"] = g.witness, v["extDim"] = g.ext;
    if (g.kind == GpKind::UpToBound) v["bound"] = g.bound;
    out.result = {{"verdict", v}, {"defectWitness", gorenstein_defect_witness(m, o.k_max)}};
  } else if (verb == "relquiver") {
    Quiver r = relation_quiver(*alg);
    out.result = {{"relationQuiver", quiver_json(r)}, {"sinksRemoved", quiver_json(remove_sinks(r))}};
  } else if (verb == "rsz-model") {
    if (!alg->is_radical_square_zero()) throw Error(ErrorCode::NotRadicalSquareZero, "rsz-model needs J^2 = 0");
    RepPtr m = module(o.source, "--source"), n = module(o.target, "--target");
    AdjacencyModel model = o.adjacency.empty() ? AdjacencyModel::from_quiver(alg->quiver()) : load_adjacency(o.adjacency);
    ColimitReport r = model_hom_report(model, {dims_of(*m), 0}, {dims_of(*n), o.shift}, o.p_max, o.window);
    out.result = {{"adjacency", model.adjacency}, {"shift", o.shift}, {"report", io::report_to_json(r)}};
  } else if (verb == "verify-rsz") {
    std::optional<AdjacencyModel> model;
    if (!o.adjacency.empty()) model = load_adjacency(o.adjacency);
    RszReport r = crosscheck_rsz(alg, o.p_max, 2, o.window, model);
    const Quiver& q = alg->quiver();
    json pairs = json::array();
    for (const auto& e : r.entries)
      pairs.push_back({{"source", q.vertex_name(e.source)},
                       {"target", q.vertex_name(e.target)},
                       {"shift", e.shift},
                       {"engineDims", e.engine_dims},
                       {"modelDims", e.model_dims},
                       {"engineVerdict", verdict_json(e.engine_verdict)},
                       {"leavittVerdict", verdict_json(e.leavitt_verdict)},
                       {"match", e.match}});
    out.result = {{"pairs", pairs}, {"allMatch", r.all_match}};
    out.verified = r.all_match;
  } else if (verb == "verify-monomial") {
    MonomialReport r = monomial_equiv_check(alg, o.p_max, 2, o.window);
    const Quiver& q = alg->quiver();
    json pairs = json::array();
    for (const auto& e : r.entries)
      pairs.push_back({{"source", q.arrow(e.source).name},
                       {"target", q.arrow(e.target).name},
                       {"shift", e.shift},
                       {"idealDims", e.b_dims},
                       {"simpleDims", e.c_dims},
                       {"idealVerdict", verdict_json(e.b_verdict)},
                       {"simpleVerdict", verdict_json(e.c_verdict)},
                       {"match", e.match}});
    out.result = {{"relationAlgebra", io::algebra_to_json(*r.relation_algebra)}, {"pairs", pairs}, {"allMatch", r.all_match}};
    out.verified = r.all_match;
  } else if (verb == "verify-buchweitz") {
    const std::size_t n = alg->quiver().vertex_count();
    std::vector<BuchweitzPair> pairs;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = 0; j < n; ++j) pairs.push_back({share(simple_rep(alg, i)), share(simple_rep(alg, j)), o.shift});
    BuchweitzReport r = buchweitz_check(alg, pairs, o.p_max, o.window);
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"source", alg->quiver().vertex_name(e.index / n)},
                         {"target", alg->quiver().vertex_name(e.index % n)},
                         {"shift", e.shift},
                         {"sgValue", e.sg.verdict.value},
                         {"sgVerdict", verdict_name(e.sg.verdict.kind)},
                         {"stableDim", e.stable_dim},
                         {"allIso", e.all_iso},
                         {"ok", e.ok}});
    out.result = {{"pairs", entries}, {"allOk", r.all_ok}};
    out.verified = r.all_ok;
  } else {
    throw Error(ErrorCode::SchemaError, "unknown verb " + verb);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity-category invariants of bound quiver algebras"};
  app.set_version_flag("--version", std::string(SING_VERSION));
  Options o;
  app.add_option("verb", o.verb,
                 "sgdim | syzygy | stablehom | projdim | gptest | relquiver | rsz-model | verify-rsz | "
                 "verify-monomial | verify-buchweitz | axioms")
      ->required()
      ->check(CLI::IsMember({"sgdim", "syzygy", "stablehom", "projdim", "gptest", "relquiver", "rsz-model",
                             "verify-rsz", "verify-monomial", "verify-buchweitz", "axioms"}));
  app.add_option("--algebra", o.algebra, "algebra file");
  app.add_option("--source", o.source, "source module file");
  app.add_option("--target", o.target, "target module file");
  app.add_option("--shift", o.shift, "shift t")->capture_default_str();
  app.add_option("--pmax", o.p_max, "largest colimit index (also the search bound of projdim)")->capture_default_str();
  app.add_option("--window", o.window, "isomorphism window of the heuristic verdict")->capture_default_str();
  app.add_option("--kmax", o.k_max, "loop bound of equality checks, Ext bound of gptest")->capture_default_str();
  app.add_option("--seed", o.seed, "seed of the property suites")->capture_default_str();
  app.add_option("--out", o.out, "report file (stdout when omitted)");
  app.add_option("--k", o.k, "syzygy index")->capture_default_str();
  app.add_option("--selfinj-dim", o.selfinj_dim, "known self-injective dimension for gptest");
  app.add_option("--adjacency", o.adjacency, "adjacency matrix file replacing the quiver's data");
  CLI11_PARSE(app, argc, argv);

  try {
    Outcome res = run(o);
    std::string inputs;
    for (const std::string* p : {&o.algebra, &o.source, &o.target, &o.adjacency})
      if (!p->empty()) inputs += io::fnv1a_hex(file_bytes(*p));
    json options = {{"algebra", o.algebra}, {"source", o.source}, {"target", o.target}, {"shift", o.shift},
                    {"pmax", o.p_max},      {"window", o.window}, {"kmax", o.k_max},    {"seed", o.seed},
                    {"k", o.k},             {"adjacency", o.adjacency}};
    if (o.selfinj_dim) options["selfinjDim"] = *o.selfinj_dim;
    json report = {{"command", {{"verb", o.verb}, {"options", options}}},
                   {"inputsDigest", io::fnv1a_hex(inputs)},
                   {"version", SING_VERSION},
                   {"seed", o.seed},
                   {"result", res.result}};
    const std::string text = io::canonical_dump(report);
    if (o.out.empty())
      std::cout << text;
    else
      io::write_text(o.out, text);
    return res.verified ? 0 : 2;
  } catch (const Error& e) {
    json err = {{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    std::cerr << io::canonical_dump(err);
    return 1;
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << io::canonical_dump(err);
    return 1;
  }
}
