#include "sing/axioms.hpp"

#include <random>

#include "sing/corpus.hpp"
#include "sing/linalg.hpp"
#include "sing/module_backend.hpp"
#include "sing/random_modules.hpp"

namespace sing {

namespace {

struct Tally {
  SuiteResult& r;
  void operator()(bool ok, const std::string& what) {
    ++r.cases;
    if (ok)
      ++r.passed;
    else
      r.failures.push_back(what);
  }
};

// Matrix of φ ↦ t ∘ φ between chosen stable bases.
Matrix induced(const StableHomSpace& from, const StableHomSpace& to, const RepMorphism& t) {
  Matrix out(from.source()->field(), to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) out.set_block(0, j, to.coordinate_column(compose(t, from.basis()[j])));
  return out;
}

bool exact_at(const Matrix& in, const Matrix& out) {
  const std::size_t kernel = out.cols() - rank(out);
  return rank(out * in) == 0 && kernel == rank(in);
}

RepMorphism random_map(const RepPtr& x, const RepPtr& y, std::mt19937_64& rng) {
  return random_combination(hom_space(x, y), x, y, rng);
}

}  // namespace

std::vector<AlgebraPtr> axiom_corpus(const Field& f) {
  std::vector<AlgebraPtr> out;
  for (const auto& named : corpus::standard(f)) out.push_back(named.algebra);
  return out;
}

SuiteResult well_definedness_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r{"well-definedness"};
  Tally tally{r};
  std::mt19937_64 rng(seed);
  const auto algs = axiom_corpus(Field::prime(7));
  for (std::size_t k = 0; k < count; ++k) {
    const AlgebraPtr& alg = algs[k % algs.size()];
    ShortExact ses = random_short_exact(alg, rng);
    std::mt19937_64 first(rng()), second(rng());
    CanonicalTriangle a = canonical_triangle(ses.g, ses.f, &first);
    CanonicalTriangle b = canonical_triangle(ses.g, ses.f, &second);
    tally(stably_equal(a.h, b.h), "sequence " + std::to_string(k) + ": connecting maps differ stably");
  }
  return r;
}

SuiteResult hom_exactness_suite(std::uint64_t seed, std::size_t count, std::size_t test_modules) {
  SuiteResult r{"hom-exactness"};
  Tally tally{r};
  std::mt19937_64 rng(seed);
  const auto algs = axiom_corpus(Field::prime(7));
  for (std::size_t k = 0; k < count; ++k) {
    const AlgebraPtr& alg = algs[k % algs.size()];
    ShortExact ses = random_short_exact(alg, rng);
    CanonicalTriangle tri = canonical_triangle(ses.g, ses.f, &rng);
    for (std::size_t t = 0; t < test_modules; ++t) {
      RepPtr x = random_module(alg, rng);
      StableHomSpace h0(x, tri.h.source()), h1(x, tri.g.source()), h2(x, tri.f.source()), h3(x, tri.f.target());
      Matrix mh = induced(h0, h1, tri.h), mg = induced(h1, h2, tri.g), mf = induced(h2, h3, tri.f);
      const std::string tag = "sequence " + std::to_string(k) + ", module " + std::to_string(t);
      tally(exact_at(mh, mg), tag + ": not exact at N");
      tally(exact_at(mg, mf), tag + ": not exact at E");
    }
  }
  return r;
}

SuiteResult calculus_suite(std::uint64_t seed, std::size_t triples, std::size_t pairs, std::size_t k_max) {
  SuiteResult r{"calculus"};
  Tally tally{r};
  std::mt19937_64 rng(seed);
  const auto algs = axiom_corpus(Field::prime(5));
  ModuleBackend backend;
  ModuleStab st(backend);
  auto eq = [&](const ModuleStabMorphism& f, const ModuleStabMorphism& g) { return st.equal_up_to(f, g, k_max).equal; };

  using Functor = LoopedFunctor<RepPtr, RepMorphism, RepPtr, RepMorphism>;
  Functor loop_functor{[](const RepPtr& x) { return ModuleStabObject{syzygy(x, 1), 0}; },
                       [&st](const RepMorphism& f) {
                         RepMorphism g = syzygy_of_morphism(f);
                         return st.stabilize(g.source(), g.target(), g);
                       },
                       [&st](const RepPtr& x) { return st.canonical_iso_inverse(ModuleStabObject{syzygy(x, 1), -1}, 1); },
                       [&st](const RepPtr& x) { return st.canonical_iso(ModuleStabObject{syzygy(x, 1), -1}, 1); }};

  for (std::size_t k = 0; k < triples; ++k) {
    const AlgebraPtr& alg = algs[k % algs.size()];
    RepPtr a = random_module(alg, rng), b = random_module(alg, rng), c = random_module(alg, rng), d = random_module(alg, rng);
    const std::string tag = "triple " + std::to_string(k);
    const std::int64_t s = static_cast<std::int64_t>(k % 3);
    ModuleStabObject x{a, -1};
    auto iso = st.canonical_iso(x, s);
    auto inv = st.canonical_iso_inverse(x, s);
    tally(eq(st.compose(inv, iso), st.identity(x)) && eq(st.compose(iso, inv), st.identity(iso.target)),
          tag + ": inverse law");

    ModuleStabObject oa{a, 0}, ob{b, 1}, oc{c, 0}, od{d, 2};
    auto f = st.make(oa, ob, 1, random_map(syzygy(a, 1), b, rng));
    auto g = st.make(ob, oc, 2, random_map(syzygy(b, 1), syzygy(c, 2), rng));
    auto h = st.make(oc, od, 2, random_map(syzygy(c, 2), d, rng));
    tally(eq(f, st.promote(f, 1 + k % 3)), tag + ": promotion");
    tally(eq(st.compose(h, st.compose(g, f)), st.compose(st.compose(h, g), f)), tag + ": associativity");
  }
  for (std::size_t k = 0; k < pairs; ++k) {
    const AlgebraPtr& alg = algs[k % algs.size()];
    RepPtr a = random_module(alg, rng), b = random_module(alg, rng), c = random_module(alg, rng);
    ModuleStabObject oa{a, 0}, ob{b, 1}, oc{c, 0};
    auto f = st.make(oa, ob, 1, random_map(syzygy(a, 1), b, rng));
    auto g = st.make(ob, oc, 1, random_map(b, syzygy(c, 1), rng));
    auto lhs = universal_apply(st, st, loop_functor, st.compose(g, f));
    auto rhs = st.compose(universal_apply(st, st, loop_functor, g), universal_apply(st, st, loop_functor, f));
    tally(eq(lhs, rhs), "pair " + std::to_string(k) + ": functoriality");
  }
  return r;
}

std::vector<SuiteResult> run_axioms(std::uint64_t seed, std::size_t k_max) {
  return {well_definedness_suite(seed), hom_exactness_suite(seed + 1), calculus_suite(seed + 2, 50, 25, k_max)};
}

}  // namespace sing
