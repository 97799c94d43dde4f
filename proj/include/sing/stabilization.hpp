#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "sing/error.hpp"

namespace sing {

/// A category with a chosen endofunctor Ω.  Morphism equality is the
/// category's own equality (for modules: stable equality).
template <class B>
concept LoopedBackend = requires(const B& b, const typename B::Object& x, const typename B::Morphism& f) {
  { b.identity(x) } -> std::convertible_to<typename B::Morphism>;
  { b.compose(f, f) } -> std::convertible_to<typename B::Morphism>;
  { b.loop(x) } -> std::convertible_to<typename B::Object>;
  { b.loop(f) } -> std::convertible_to<typename B::Morphism>;
  { b.equal(f, f) } -> std::convertible_to<bool>;
  { b.same_object(x, x) } -> std::convertible_to<bool>;
};

/// The pair (X, n).
template <class Obj>
struct StabObject {
  Obj object;
  std::int64_t shift = 0;
};

/// ι_p(f) for f: Ω^{p-n} X -> Ω^{p-m} Y, where source = (X, n), target = (Y, m).
template <class Obj, class Mor>
struct StabMorphism {
  StabObject<Obj> source;
  StabObject<Obj> target;
  std::int64_t level = 0;
  Mor rep;
};

struct EqualityVerdict {
  bool equal;
  std::size_t at;  ///< number of extra Ω applications when equal, otherwise the bound
};

/// The formal stabilization of a looped backend.
template <LoopedBackend B>
class Stabilization {
 public:
  using Obj = typename B::Object;
  using Mor = typename B::Morphism;
  using SObj = StabObject<Obj>;
  using SMor = StabMorphism<Obj, Mor>;

  explicit Stabilization(const B& backend) : b_(backend) {}
  const B& backend() const noexcept { return b_; }

  Obj loop(const Obj& x, std::int64_t k) const {
    Obj cur = x;
    for (std::int64_t i = 0; i < k; ++i) cur = b_.loop(cur);
    return cur;
  }
  Mor loop(const Mor& f, std::int64_t k) const {
    Mor cur = f;
    for (std::int64_t i = 0; i < k; ++i) cur = b_.loop(cur);
    return cur;
  }

  bool same(const SObj& x, const SObj& y) const { return x.shift == y.shift && b_.same_object(x.object, y.object); }

  SMor make(const SObj& x, const SObj& y, std::int64_t level, Mor rep) const {
    if (level < std::max(x.shift, y.shift)) throw Error(ErrorCode::ShiftOutOfRange, "level below max(n, m)");
    return SMor{x, y, level, std::move(rep)};
  }

  /// ι_0(f) for f: X -> Y.
  SMor stabilize(const Obj& x, const Obj& y, Mor f) const { return make(SObj{x, 0}, SObj{y, 0}, 0, std::move(f)); }

  SMor identity(const SObj& x) const { return SMor{x, x, x.shift, b_.identity(x.object)}; }

  /// ι_p(f) = ι_{p+k}(Ω^k f).
  SMor promote(const SMor& f, std::int64_t k) const {
    if (k < 0) throw Error(ErrorCode::ShiftOutOfRange, "promotion by a negative amount");
    return SMor{f.source, f.target, f.level + k, loop(f.rep, k)};
  }

  /// ι_q(g) ∘ ι_p(f) = ι_r(Ω^{r-q} g ∘ Ω^{r-p} f) with r = max(p, q).
  SMor compose(const SMor& g, const SMor& f) const {
    if (!same(f.target, g.source)) throw Error(ErrorCode::SourceTargetMismatch, "stable morphisms are not composable");
    const std::int64_t r = std::max(f.level, g.level);
    return SMor{f.source, g.target, r, b_.compose(loop(g.rep, r - g.level), loop(f.rep, r - f.level))};
  }

  SObj suspend(const SObj& x, std::int64_t k = 1) const { return SObj{x.object, x.shift + k}; }
  SMor suspend(const SMor& f, std::int64_t k = 1) const {
    return SMor{suspend(f.source, k), suspend(f.target, k), f.level + k, f.rep};
  }
  SObj unsuspend(const SObj& x, std::int64_t k = 1) const { return suspend(x, -k); }
  SMor unsuspend(const SMor& f, std::int64_t k = 1) const { return suspend(f, -k); }

  /// ι_{n+s}(Id): (X, n) -> (Ω^s X, n + s).
  SMor canonical_iso(const SObj& x, std::int64_t s) const {
    Obj ox = loop(x.object, s);
    return SMor{x, SObj{ox, x.shift + s}, x.shift + s, b_.identity(ox)};
  }
  /// The inverse (Ω^s X, n + s) -> (X, n), also represented by an identity.
  SMor canonical_iso_inverse(const SObj& x, std::int64_t s) const {
    Obj ox = loop(x.object, s);
    return SMor{SObj{ox, x.shift + s}, x, x.shift + s, b_.identity(ox)};
  }

  /// Equal(i) when Ω^i of the representatives agree at a common level for
  /// some i <= k_max; otherwise not equal up to k_max (no proof of inequality).
  EqualityVerdict equal_up_to(const SMor& f, const SMor& g, std::size_t k_max) const {
    if (!same(f.source, g.source) || !same(f.target, g.target))
      throw Error(ErrorCode::SourceTargetMismatch, "stable morphisms are not parallel");
    const std::int64_t r = std::max(f.level, g.level);
    Mor a = loop(f.rep, r - f.level), c = loop(g.rep, r - g.level);
    for (std::size_t i = 0;; ++i) {
      if (b_.equal(a, c)) return {true, i};
      if (i == k_max) return {false, k_max};
      a = b_.loop(a);
      c = b_.loop(c);
    }
  }

 private:
  const B& b_;
};

/// A looped functor (F, δ) from a backend into a stabilization, δ_X: F(ΩX) -> Σ^{-1} F(X)
/// an isomorphism with given inverse.
template <class SrcObj, class SrcMor, class TgtObj, class TgtMor>
struct LoopedFunctor {
  std::function<StabObject<TgtObj>(const SrcObj&)> object;
  std::function<StabMorphism<TgtObj, TgtMor>(const SrcMor&)> morphism;
  std::function<StabMorphism<TgtObj, TgtMor>(const SrcObj&)> delta;
  std::function<StabMorphism<TgtObj, TgtMor>(const SrcObj&)> delta_inverse;
};

/// The extension of (F, δ) to the stabilization of the source:
///   F̃(ι_p(f)) = Σ^p(δ^{(p-m)}_Y ∘ F(f) ∘ (δ^{(p-n)}_X)^{-1}),
/// with δ^{(0)} = Id and δ^{(k+1)}_X = Σ^{-k}(δ_X) ∘ δ^{(k)}_{ΩX}.
template <LoopedBackend SB, LoopedBackend TB>
StabMorphism<typename TB::Object, typename TB::Morphism> universal_apply(
    const Stabilization<SB>& src, const Stabilization<TB>& tgt,
    const LoopedFunctor<typename SB::Object, typename SB::Morphism, typename TB::Object, typename TB::Morphism>& fun,
    const StabMorphism<typename SB::Object, typename SB::Morphism>& phi) {
  using TMor = StabMorphism<typename TB::Object, typename TB::Morphism>;
  // δ^{(k)}_X or its inverse.
  std::function<TMor(const typename SB::Object&, std::int64_t, bool)> iterated =
      [&](const typename SB::Object& x, std::int64_t k, bool inverse) -> TMor {
    if (k == 0) return tgt.identity(fun.object(x));
    TMor inner = iterated(src.backend().loop(x), k - 1, inverse);
    TMor outer = tgt.unsuspend(inverse ? fun.delta_inverse(x) : fun.delta(x), k - 1);
    return inverse ? tgt.compose(inner, outer) : tgt.compose(outer, inner);
  };
  const std::int64_t p = phi.level;
  TMor a = fun.morphism(phi.rep);
  TMor d_in = iterated(phi.source.object, p - phi.source.shift, true);
  TMor d_out = iterated(phi.target.object, p - phi.target.shift, false);
  return tgt.suspend(tgt.compose(d_out, tgt.compose(a, d_in)), p);
}

}  // namespace sing
