#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sing/colimit.hpp"
#include "sing/homological.hpp"

namespace sing {

struct SgQuery {
  RepPtr source;
  RepPtr target;
  std::int64_t shift = 0;
  std::int64_t p_max = 12;
  std::size_t window = 3;
};

/// Hom_{D_sg}(M, Σ^t N) as the colimit of stHom(Ω^p M, Ω^{p-t} N), p >= max(0, t).
ColimitReport sg_hom_dim(const SgQuery& q);

enum class SgZeroKind { Zero, NonzeroCertified, UnknownUpTo };

struct SgZeroVerdict {
  SgZeroKind kind;
  std::size_t value;  ///< read according to kind, see is_sg_zero
  std::size_t start = 0;  ///< first syzygy index of the period
};

/// Zero(d) when pd M = d <= bound; NonzeroCertified when Ω^a M and Ω^b M are
/// stably isomorphic and nonprojective for some a < b <= bound.
SgZeroVerdict is_sg_zero(const RepPtr& m, std::size_t bound);

bool is_selfinjective(const AlgebraPtr& alg);

enum class GpKind { Certified, UpToBound, NotGP };

struct GpVerdict {
  GpKind kind;
  std::string reason;
  std::size_t bound = 0;    ///< for UpToBound
  std::size_t witness = 0;  ///< i with Ext^i(M, A) != 0, for NotGP
  std::size_t ext = 0;      ///< dim Ext^witness(M, A)
};

GpVerdict gp_test(const RepPtr& m, std::size_t ext_bound, std::optional<std::size_t> selfinj_dim = std::nullopt);

/// M is nonzero in D_sg and not Gorenstein-projective: a witness that the
/// Gorenstein defect category does not vanish.
bool gorenstein_defect_witness(const RepPtr& m, std::size_t bound);

struct BuchweitzPair {
  RepPtr source;
  RepPtr target;
  std::int64_t shift = 0;
};

struct BuchweitzEntry {
  std::size_t index;
  std::int64_t shift;
  ColimitReport sg;
  std::size_t stable_dim;
  bool all_iso;
  bool ok;
};

struct BuchweitzReport {
  std::vector<BuchweitzEntry> entries;
  bool all_ok = true;
};

/// Over a self-injective algebra the stabilization adds nothing: the
/// singularity-category Hom equals stHom(Ω^{p0} M, Ω^{p0-t} N) computed
/// directly, and every structure map is an isomorphism.
BuchweitzReport buchweitz_check(const AlgebraPtr& alg, const std::vector<BuchweitzPair>& pairs, std::int64_t p_max,
                                std::size_t window = 3);

}  // namespace sing
