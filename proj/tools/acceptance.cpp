// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "sing/axioms.hpp"
#include "sing/corpus.hpp"
#include "sing/random_modules.hpp"
#include "sing/rsz.hpp"
#include "sing/singularity.hpp"

using namespace sing;

namespace {

// Wall-clock limits in seconds; all numeric comparisons are exact.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 2.0;
constexpr double kLimit4 = 5.0;
constexpr double kLimit5 = 30.0;
constexpr double kLimit6 = 30.0;
constexpr double kLimit7 = 5.0;
constexpr double kNoLimit = 1e9;

constexpr std::uint64_t kSeed = 20240601;

RepPtr S(const AlgebraPtr& a, VertexId v) { return share(simple_rep(a, v)); }
RepPtr P(const AlgebraPtr& a, VertexId v) { return share(projective_rep(a, v)); }

struct Check {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

bool criterion(int id, const char* title, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < limit, "runtime limit exceeded");
  std::printf("criterion %2d: %s  %s (%.3f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title, secs, c.ok ? "" : "  -- ",
              c.note.c_str());
  return c.ok;
}

}  // namespace

int main() {
  const Field F7 = Field::prime(7);
  bool all = true;

  all &= criterion(1, "periodicity over k[x]/(x^2)", kLimit1, [&](Check& c) {
    auto d = corpus::dual_numbers(F7);
    for (std::int64_t t = -3; t <= 3; ++t) {
      ColimitReport r = sg_hom_dim({S(d, 0), S(d, 0), t, 8, 3});
      c.expect(r.verdict.kind == VerdictKind::CertifiedStable && r.verdict.value == 1, "verdict at t=" + std::to_string(t));
      for (const auto& row : r.rank_table)
        for (auto v : row) c.expect(v == 1, "rank-table entry != 1");
    }
  });

  all &= criterion(2, "vanishing over A2", kLimit2, [&](Check& c) {
    auto a = corpus::a2(F7);
    for (VertexId i = 0; i < 2; ++i)
      for (VertexId j = 0; j < 2; ++j)
        for (std::int64_t t = -2; t <= 2; ++t)
          c.expect(sg_hom_dim({S(a, i), S(a, j), t, 8, 3}).verdict.kind == VerdictKind::CertifiedZero, "nonzero sg Hom");
    for (RepPtr m : {S(a, 0), S(a, 1), P(a, 0)}) {
      SgZeroVerdict z = is_sg_zero(m, 4);
      c.expect(z.kind == SgZeroKind::Zero && z.value <= 1, "indecomposable not Zero(d<=1)");
    }
  });

  all &= criterion(3, "Buchweitz comparison on cyclic-3 J^2", kLimit3, [&](Check& c) {
    auto a = corpus::cyclic_radical_square_zero(F7, 3);
    std::vector<BuchweitzPair> pairs;
    for (VertexId i = 0; i < 3; ++i)
      for (VertexId j = 0; j < 3; ++j) pairs.push_back({S(a, i), S(a, j), 0});
    BuchweitzReport r = buchweitz_check(a, pairs, 8);
    c.expect(r.all_ok, "buchweitz_check reported a violation");
    for (const auto& e : r.entries) {
      const std::uint64_t delta = e.index / 3 == e.index % 3 ? 1 : 0;
      c.expect(e.stable_dim == delta && e.sg.verdict.value == delta, "not the Kronecker delta");
      c.expect(e.all_iso, "structure map not an isomorphism");
    }
  });

  all &= criterion(4, "growth for two loops with J^2", kLimit4, [&](Check& c) {
    auto a = corpus::two_loops_radical_square_zero(F7);
    ColimitReport r = sg_hom_dim({S(a, 0), S(a, 0), 0, 3, 3});
    c.expect(r.dims == std::vector<std::uint64_t>{1, 4, 16, 64}, "dims differ from 1,4,16,64");
    c.expect(r.verdict.kind == VerdictKind::GrowingLowerBound, "verdict is not GrowingLowerBound");
  });

  all &= criterion(5, "radical-square-zero cross-check", kLimit5, [&](Check& c) {
    std::vector<AlgebraPtr> algs{corpus::cyclic_radical_square_zero(F7, 2), corpus::cyclic_radical_square_zero(F7, 3),
                                 corpus::two_loops_radical_square_zero(F7)};
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 3; ++i) algs.push_back(random_rsz_algebra(F7, rng, 4, 6));
    std::size_t bad = 0;
    for (const auto& a : algs)
      for (const auto& e : crosscheck_rsz(a, 6, 2).entries) bad += e.match ? 0 : 1;
    c.expect(bad == 0, std::to_string(bad) + " discrepancies");
  });

  all &= criterion(6, "monomial singular equivalence", kLimit6, [&](Check& c) {
    std::vector<AlgebraPtr> algs{corpus::dual_numbers(F7), corpus::two_cycle_gentle(F7), corpus::a3_zero_relation(F7)};
    std::mt19937_64 rng(kSeed);
    algs.push_back(random_gentle_algebra(F7, rng, 4));
    std::size_t bad = 0;
    for (const auto& b : algs)
      for (const auto& e : monomial_equiv_check(b, 6, 2).entries) bad += e.match ? 0 : 1;
    c.expect(bad == 0, std::to_string(bad) + " discrepancies");
  });

  all &= criterion(7, "colimit analyzer against eventual rank", kLimit7, [&](Check& c) {
    std::mt19937_64 rng(kSeed);
    std::bernoulli_distribution zero(0.5);
    std::uniform_int_distribution<int> val(1, 6);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 1 + rng() % 5;
      Matrix t(F7, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!zero(rng)) t.set(i, j, Scalar(F7, val(rng)));
      ColimitReport r = constant_system_report(t, 8, 3);
      const std::uint64_t e = eventual_rank(t);
      c.expect(r.rank(0, r.p_max) == e, "in-table limiting rank differs from eventual rank");
      c.expect(r.verdict.value == e, "verdict value differs from eventual rank");
    }
  });

  all &= criterion(8, "well-definedness of connecting maps", kNoLimit, [&](Check& c) {
    SuiteResult s = well_definedness_suite(kSeed, 50);
    c.expect(s.cases == 50 && s.ok(), s.failures.empty() ? "wrong case count" : s.failures.front());
  });

  all &= criterion(9, "Hom-exactness of canonical left triangles", kNoLimit, [&](Check& c) {
    SuiteResult s = hom_exactness_suite(kSeed, 50, 3);
    c.expect(s.cases == 300 && s.ok(), s.failures.empty() ? "wrong case count" : s.failures.front());
  });

  all &= criterion(10, "stabilization calculus identities", kNoLimit, [&](Check& c) {
    SuiteResult s = calculus_suite(kSeed, 50, 25, 8);
    c.expect(s.cases == 175 && s.ok(), s.failures.empty() ? "wrong case count" : s.failures.front());
  });

  all &= criterion(11, "Gorenstein-projective test", kNoLimit, [&](Check& c) {
    auto a = corpus::a2(F7);
    GpVerdict v = gp_test(S(a, 0), 4);
    c.expect(v.kind == GpKind::NotGP && v.witness == 1 && v.ext == 1, "S1 over A2 is not NotGP(1)");
    c.expect(ext_dim(S(a, 0), share(regular_rep(a)), 1) == 1, "Ext^1(S1, A) != 1");
    std::mt19937_64 rng(kSeed);
    std::size_t algebras = 0;
    for (const auto& named : corpus::standard(F7)) {
      if (!is_selfinjective(named.algebra)) continue;
      ++algebras;
      std::vector<RepPtr> mods;
      for (VertexId u = 0; u < named.algebra->quiver().vertex_count(); ++u) {
        mods.push_back(S(named.algebra, u));
        mods.push_back(P(named.algebra, u));
      }
      for (int i = 0; i < 10; ++i) mods.push_back(random_module(named.algebra, rng));
      for (const auto& m : mods) c.expect(gp_test(m, 4).kind == GpKind::Certified, named.name + ": module not GP_Certified");
    }
    c.expect(algebras >= 3, "self-injective corpus too small");
  });

  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
