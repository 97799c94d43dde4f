#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sing/linalg.hpp"

namespace sing {

enum class VerdictKind { CertifiedStable, CertifiedZero, HeuristicStable, GrowingLowerBound };

std::string_view verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind;
  std::uint64_t value = 0;
  std::string reason;
};

/// Dimensions H_p (p0 <= p <= p_max) of a direct system of Hom spaces, the
/// ranks of its composite structure maps, and a verdict on the colimit.
struct ColimitReport {
  std::int64_t p0 = 0;
  std::int64_t p_max = 0;
  std::size_t window = 3;
  std::vector<std::uint64_t> dims;
  /// rank_table[i][j] = rank of H_{p0+i} -> H_{p0+i+j}.
  std::vector<std::vector<std::uint64_t>> rank_table;
  Verdict verdict;

  std::uint64_t dim_at(std::int64_t p) const;
  std::uint64_t rank(std::int64_t p, std::int64_t q) const;
  /// rank(H_p -> H_{p_max}) for each p in range.
  std::vector<std::uint64_t> limiting_ranks() const;
};

struct PeriodCertificate {
  std::int64_t start;
  std::int64_t length;
};

/// Everything the verdict logic needs.  `dim` and `rank` must accept indices
/// beyond p_max when a period certificate is supplied.
struct ColimitSource {
  std::int64_t p0 = 0;
  std::int64_t p_max = 12;
  std::size_t window = 3;
  std::function<std::uint64_t(std::int64_t)> dim;
  std::function<std::uint64_t(std::int64_t, std::int64_t)> rank;
  /// H_p = 0 for all p >= zero_from.
  std::optional<std::int64_t> zero_from;
  std::string zero_reason;
  /// The system is periodic up to isomorphism from `start` on.
  std::optional<PeriodCertificate> period;
  std::string period_reason;
};

/// Verdicts, in order of preference:
///  - CertifiedZero from a zero certificate, or a periodic system whose
///    period map is eventually zero;
///  - CertifiedStable from a period certificate: H_a when the maps over one
///    period are isomorphisms, otherwise the eventual rank of the period map;
///  - HeuristicStable(H_{p_max}) when the last `window` maps are isomorphisms;
///  - GrowingLowerBound: the largest rank(H_p -> H_{p_max}) with p < p_max.
ColimitReport build_colimit_report(const ColimitSource& src);

/// The report of a finite direct system, p0 = 0 and p_max = last index.
ColimitReport direct_system_report(const DirectSystem& sys, std::size_t window = 3);

/// V -t-> V -t-> ... up to p_max, certified periodic with period 1.
ColimitReport constant_system_report(const Matrix& t, std::int64_t p_max, std::size_t window = 3);

}  // namespace sing
