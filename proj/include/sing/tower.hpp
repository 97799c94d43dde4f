#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "sing/colimit.hpp"
#include "sing/homological.hpp"

namespace sing {

/// Iterated syzygies kept as multisets of "atoms" up to projective summands.
///
/// A module is split into coordinate blocks (connected components of the
/// support of its arrow matrices); each non-projective block is matched to a
/// registered atom by an explicit isomorphism.  Ω of an atom is decomposed the
/// same way once, so Ω^k of any registered object is a multiset of atoms and
/// stable Hom between such sums splits into stable Hom between atoms.
///
/// The structure map stHom(A,B) -> stHom(ΩA, ΩB) is recorded per atom pair
/// as blocks L_rs into stHom(child_r(A), child_s(B)).  The kernel of the
/// k-fold map is then K(A,B,k) = {c : L_rs c ∈ K(child_r, child_s, k-1) for
/// all r, s}, so ranks of long composites need no module larger than an atom.
///
/// Not safe for concurrent use: results are memoized.
class SyzygyTower {
 public:
  using Multiset = std::map<std::size_t, std::uint64_t>;

  explicit SyzygyTower(AlgebraPtr alg, IsoOptions iso = {});

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t add_object(const RepPtr& m);
  /// Atom multiplicities of Ω^k of an object, projective summands dropped.
  const Multiset& level(std::size_t obj, std::size_t k);

  /// dim stHom(Ω^kx X, Ω^ky Y).
  std::uint64_t hom_dim(std::size_t x, std::size_t kx, std::size_t y, std::size_t ky);
  /// Rank of Ω^steps: stHom(Ω^kx X, Ω^ky Y) -> stHom(Ω^{kx+steps} X, Ω^{ky+steps} Y).
  std::uint64_t map_rank(std::size_t x, std::size_t kx, std::size_t y, std::size_t ky, std::size_t steps);

  /// First k <= bound with Ω^k projective.
  std::optional<std::size_t> zero_level(std::size_t obj, std::size_t bound);
  /// First (a, L) with level(a) == level(a + L), a + L <= bound.
  std::optional<std::pair<std::size_t, std::size_t>> period(std::size_t obj, std::size_t bound);

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const RepPtr& atom_module(std::size_t id) const { return atoms_.at(id).module; }
  const StableHomSpace& stable_hom(std::size_t a, std::size_t b);

 private:
  struct Child {
    std::size_t atom;
    RepMorphism into_omega;  ///< atom -> Ω(parent)
    RepMorphism from_omega;  ///< Ω(parent) -> atom
  };
  struct Atom {
    RepPtr module;
    bool expanded = false;
    std::vector<Child> children;
  };
  struct StepBlock {
    std::size_t r, s;
    Matrix map;  ///< stHom(A,B) -> stHom(child_r(A), child_s(B))
  };

  std::vector<Child> classify(const RepPtr& m);
  std::size_t find_or_add(const RepPtr& block, RepMorphism& witness);
  bool looks_projective(const Representation& m);
  const std::vector<Child>& children(std::size_t a);
  const std::vector<StepBlock>& step(std::size_t a, std::size_t b);
  const Matrix& annihilator(std::size_t a, std::size_t b, std::size_t k);

  AlgebraPtr alg_;
  IsoOptions iso_;
  std::vector<std::size_t> projective_dims_;
  std::vector<Atom> atoms_;
  std::vector<std::vector<Multiset>> levels_;
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<StableHomSpace>> stable_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<StepBlock>> steps_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Matrix> annihilators_;
};

/// Restriction of a module to coordinate blocks, with inclusions and projections.
struct CoordinateBlock {
  RepPtr module;
  RepMorphism inclusion;
  RepMorphism projection;
};
std::vector<CoordinateBlock> coordinate_blocks(const RepPtr& m);

/// Report of colim_p stHom(Ω^{p-n} X, Ω^{p-m} Y) for p0 = max(n, m) <= p <= p_max.
/// Zero and period certificates are searched up to `certificate_depth` syzygy levels.
ColimitReport tower_report(SyzygyTower& tower, std::size_t x, std::int64_t n, std::size_t y, std::int64_t m,
                           std::int64_t p_max, std::size_t window, std::size_t certificate_depth);

/// The same system computed directly from Ω^k modules and explicit structure
/// matrices, without certificates.  Only feasible for small modules.
ColimitReport explicit_report(const RepPtr& x, std::int64_t n, const RepPtr& y, std::int64_t m, std::int64_t p_max,
                              std::size_t window);

}  // namespace sing
