#include "sing/colimit.hpp"

#include <algorithm>
#include <memory>

#include "sing/error.hpp"

namespace sing {

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedStable: return "CertifiedStable";
    case VerdictKind::CertifiedZero: return "CertifiedZero";
    case VerdictKind::HeuristicStable: return "HeuristicStable";
    case VerdictKind::GrowingLowerBound: return "GrowingLowerBound";
  }
  return "?";
}

std::uint64_t ColimitReport::dim_at(std::int64_t p) const {
  if (p < p0 || p > p_max) throw Error(ErrorCode::BadIndex, "index outside the report");
  return dims[static_cast<std::size_t>(p - p0)];
}

std::uint64_t ColimitReport::rank(std::int64_t p, std::int64_t q) const {
  if (p < p0 || q < p || q > p_max) throw Error(ErrorCode::BadIndex, "index outside the report");
  return rank_table[static_cast<std::size_t>(p - p0)][static_cast<std::size_t>(q - p)];
}

std::vector<std::uint64_t> ColimitReport::limiting_ranks() const {
  std::vector<std::uint64_t> out;
  for (std::int64_t p = p0; p <= p_max; ++p) out.push_back(rank(p, p_max));
  return out;
}

namespace {

constexpr std::uint64_t kEventualRankBudget = 4096;

bool is_iso_step(const ColimitSource& s, std::int64_t p) {
  const std::uint64_t d = s.dim(p);
  return d == s.dim(p + 1) && s.rank(p, p + 1) == d;
}

}  // namespace

ColimitReport build_colimit_report(const ColimitSource& src) {
  if (src.p_max < src.p0) throw Error(ErrorCode::ShiftOutOfRange, "p_max is below the first admissible index");
  ColimitReport r;
  r.p0 = src.p0;
  r.p_max = src.p_max;
  r.window = src.window;
  for (std::int64_t p = src.p0; p <= src.p_max; ++p) {
    r.dims.push_back(src.dim(p));
    std::vector<std::uint64_t> row;
    for (std::int64_t q = p; q <= src.p_max; ++q) row.push_back(q == p ? r.dims.back() : src.rank(p, q));
    r.rank_table.push_back(std::move(row));
  }

  if (src.zero_from) {
    r.verdict = {VerdictKind::CertifiedZero, 0, src.zero_reason};
    return r;
  }
  if (src.period) {
    const auto [a, len] = *src.period;
    bool all_zero = true, all_iso = true;
    for (std::int64_t p = a; p < a + len; ++p) {
      all_zero = all_zero && src.dim(p) == 0;
      all_iso = all_iso && is_iso_step(src, p);
    }
    if (all_zero) {
      r.verdict = {VerdictKind::CertifiedZero, 0, src.period_reason + "; zero over a full period"};
      return r;
    }
    if (all_iso) {
      r.verdict = {VerdictKind::CertifiedStable, src.dim(a), src.period_reason + "; structure maps are isomorphisms"};
      return r;
    }
    const std::uint64_t d = src.dim(a);
    if (d * static_cast<std::uint64_t>(len) <= kEventualRankBudget) {
      // The colimit of V -T-> V -T-> ... has dimension rank(T^dim V).
      const std::uint64_t e = src.rank(a, a + static_cast<std::int64_t>(d) * len);
      if (e == 0)
        r.verdict = {VerdictKind::CertifiedZero, 0, src.period_reason + "; period map is nilpotent"};
      else
        r.verdict = {VerdictKind::CertifiedStable, e, src.period_reason + "; eventual rank of the period map"};
      return r;
    }
  }
  const std::int64_t span = src.p_max - src.p0;
  if (src.window > 0 && span >= static_cast<std::int64_t>(src.window)) {
    bool iso = true;
    for (std::int64_t p = src.p_max - static_cast<std::int64_t>(src.window); p < src.p_max && iso; ++p)
      iso = r.dim_at(p) == r.dim_at(p + 1) && r.rank(p, p + 1) == r.dim_at(p);
    if (iso) {
      r.verdict = {VerdictKind::HeuristicStable, r.dims.back(), "structure maps are isomorphisms over the window"};
      return r;
    }
  }
  std::uint64_t lb = span == 0 ? r.dims.back() : 0;
  for (std::int64_t p = src.p0; p < src.p_max; ++p) lb = std::max(lb, r.rank(p, src.p_max));
  r.verdict = {VerdictKind::GrowingLowerBound, lb, "no stabilization certified within the table"};
  return r;
}

ColimitReport direct_system_report(const DirectSystem& sys, std::size_t window) {
  sys.validate();
  ColimitSource src;
  src.p0 = 0;
  src.p_max = static_cast<std::int64_t>(sys.spaces.size()) - 1;
  src.window = window;
  src.dim = [&](std::int64_t p) { return static_cast<std::uint64_t>(sys.spaces.at(static_cast<std::size_t>(p))); };
  src.rank = [&](std::int64_t p, std::int64_t q) {
    return static_cast<std::uint64_t>(composite_rank(sys, static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
  };
  return build_colimit_report(src);
}

ColimitReport constant_system_report(const Matrix& t, std::int64_t p_max, std::size_t window) {
  if (t.rows() != t.cols()) throw Error(ErrorCode::NonSquare, "constant system needs a square map");
  if (p_max < 0) throw Error(ErrorCode::ShiftOutOfRange, "p_max must be non-negative");
  // powers[k] = t^k, grown on demand.
  auto powers = std::make_shared<std::vector<Matrix>>(1, Matrix::identity(t.field(), t.rows()));
  ColimitSource src;
  src.p0 = 0;
  src.p_max = p_max;
  src.window = window;
  src.dim = [n = t.rows()](std::int64_t) { return static_cast<std::uint64_t>(n); };
  src.rank = [powers, t](std::int64_t p, std::int64_t q) {
    const auto k = static_cast<std::size_t>(q - p);
    while (powers->size() <= k) powers->push_back(t * powers->back());
    return static_cast<std::uint64_t>(rank((*powers)[k]));
  };
  src.period = PeriodCertificate{0, 1};
  src.period_reason = "constant system";
  return build_colimit_report(src);
}

}  // namespace sing
