#include "ksplit/bounds.hpp"

#include <cmath>

#include "ksplit/constructions.hpp"
#include "ksplit/error.hpp"

namespace ksplit {

namespace {

enum class Family { k2t, star, tree, unsupported };

struct FamilyInfo {
  Family family = Family::unsupported;
  std::uint64_t t = 0;  // K_{2,t}: t; star: leaves; tree: edges
};

FamilyInfo classify(const ForbiddenGraph& h) {
  if (auto st = h.as_complete_bipartite()) {
    if (st->first == 2) return {Family::k2t, st->second};
    if (st->first == 1) return {Family::star, st->second};
    return {};
  }
  if (h.is_star()) return {Family::star, h.graph.edge_count()};
  if (h.is_tree()) return {Family::tree, h.graph.edge_count()};
  return {};
}

std::uint64_t choose2(std::uint64_t x) { return x * (x > 0 ? x - 1 : 0) / 2; }

// Largest E with 4E <= ell * (1 + sqrt(d)), computed exactly.
std::uint64_t kst_floor(std::uint64_t ell, std::uint64_t d) {
  using i128 = __int128;
  const auto fits = [&](std::uint64_t e) {
    const i128 x = i128{4} * e - ell;
    if (x <= 0) return true;
    return x * x <= i128{ell} * ell * d;
  };
  const long double approx = static_cast<long double>(ell) * (1.0L + std::sqrt(static_cast<long double>(d))) / 4.0L;
  auto e = static_cast<std::uint64_t>(approx);
  while (e > 0 && !fits(e)) --e;
  while (fits(e + 1)) ++e;
  return e;
}

void unsupported(const ForbiddenGraph& h) {
  throw Error(Errc::UnsupportedFamily, "no finite Turan bound for " + h.descriptor);
}

}  // namespace

TuranInterval turan_bound(const ForbiddenGraph& h, std::uint64_t ell) {
  const FamilyInfo info = classify(h);
  if (info.family == Family::unsupported) unsupported(h);
  if (ell < h.graph.vertex_count()) {
    return {choose2(ell), choose2(ell), true, "C(ell,2): K_ell is too small to contain H"};
  }
  switch (info.family) {
    case Family::k2t: {
      // ex(ell, K_{2,s+1}) <= (1/4) ell (1 + sqrt(4 s ell - (4s - 1)))
      const std::uint64_t s = info.t - 1;
      const std::uint64_t d = 4 * s * ell - (4 * s - 1);
      return {0, kst_floor(ell, d), false,
              "floor(ell*(1+sqrt(4*" + std::to_string(s) + "*ell-" + std::to_string(4 * s - 1) + "))/4)"};
    }
    case Family::star: {
      const std::uint64_t value = ell * (info.t - 1) / 2;
      return {value, value, true, "floor(ell*(t-1)/2), t=" + std::to_string(info.t)};
    }
    case Family::tree: {
      const std::uint64_t t = info.t;
      const std::uint64_t low = (ell / t) * choose2(t) + choose2(ell % t);
      return {low, ell * (t - 1), false,
              "low: floor(ell/t)*C(t,2)+C(ell mod t,2); high: ell*(t-1), t=" + std::to_string(t)};
    }
    case Family::unsupported: break;
  }
  unsupported(h);
  return {};
}

std::uint64_t necessary_k_lower(const ForbiddenGraph& h, std::uint64_t n) {
  if (n < 2) throw Error(Errc::ParameterError, "need n >= 2");
  const std::uint64_t pairs = choose2(n);
  std::uint64_t best = 1;
  // turan_bound(.).high is nondecreasing in ell, so the first failure ends the scan.
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (turan_bound(h, n * k).high >= pairs) break;
    best = k;
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

constexpr const char* kLowerNote =
    "lower bound reported as f >= k when ex(nk,H) < C(n,2); the same inequality excludes (n,k)-graphs, "
    "so f >= k+1 also holds";

BoundEnd necessary_lower(const ForbiddenGraph& h, std::uint64_t n) {
  const auto k = necessary_k_lower(h, n);
  return {k, "necessary edge count: an H-free (n,k)-graph has C(n,2) <= ex(nk,H)",
          "largest k with " + turan_bound(h, n * k).formula + " < C(n,2) at ell=n*k", true};
}

bool certify_split(BoundReport& report, const ForbiddenGraph& h, SplitGraph split) {
  const bool structure = verify_split(split, SplitMode::strict).passed;
  const bool free = !find_forbidden(split.graph(), h).has_value();
  if (structure && free) {
    report.achieved_k = split.k();
    report.upper.certified = true;
    report.construction = std::move(split);
    return true;
  }
  report.notes.push_back("construction failed verification");
  return false;
}

}  // namespace

BoundReport split_bounds(const ForbiddenGraph& h, std::uint64_t n, const SplitBoundsOptions& options) {
  if (n < 2) throw Error(Errc::ParameterError, "need n >= 2");
  BoundReport report;
  report.forbidden = h.descriptor;
  report.n = n;

  if (!h.is_bipartite()) {
    if (n >= h.graph.vertex_count()) {
      report.lower = {2, "the only (n,1)-graph is K_n, which contains H", "n >= |V(H)|", true};
    } else {
      report.lower = {1, "trivial", "k >= 1", true};
    }
    report.upper = {2, "bipartite (n,2)-split: red/blue vertex per blob, edges red_i-blue_j", "f(n,H) <= 2", false};
    report.notes.push_back("H is not bipartite: f(n,H) = 2 via the bipartite split");
    if (options.certify) certify_split(report, h, build_bipartite_split(n));
    return report;
  }

  const FamilyInfo info = classify(h);
  switch (info.family) {
    case Family::k2t: {
      report.lower = necessary_lower(h, n);
      report.notes.push_back(kLowerNote);
      report.notes.push_back("asymptotic (informational): C n^(1/3) <= f(n,K_{2,t}) <= (2+o(1)) n^(1/3)");
      if (n < 8) {
        report.upper = {n - 1, "perfect-matching (n,n-1)-graph has max degree 1", "n-1", false};
        break;
      }
      const auto params = c4_pipeline_parameters(n);
      const std::string formula = "2*next_prime(ceil(sqrt(ceil(n^(2/3))))) = 2*" + std::to_string(params.p);
      if (params.p > AffinePlane::kMaxPrime) {
        report.upper = {params.blob_size(), "informational: affine-plane pipeline beyond the size guard", formula,
                        false};
        break;
      }
      report.upper = {params.blob_size(), "C4-free affine-plane split restricted to n blobs and pruned", formula,
                      false};
      if (options.certify) certify_split(report, h, construct_c4_free_split(n));
      break;
    }
    case Family::star: {
      if (info.t < 2) unsupported(h);
      report.lower = necessary_lower(h, n);
      report.notes.push_back(kLowerNote);
      report.notes.push_back("star bounds (informational): (n-1)/(t-1) <= f(n,S_t) <= n/(t-1)");
      if (n < 3) {
        report.upper = {1, "K_2 has max degree 1", "1", false};
        break;
      }
      report.upper = {star_split_k(n, info.t), "equitable round-robin grouping into ceil(R/(t-1)) colors",
                      "ceil(R/(t-1)), R = n-1 (n even) or n (n odd)", false};
      if (options.certify) certify_split(report, h, build_star_free_split(n, info.t));
      break;
    }
    case Family::tree: {
      report.lower = necessary_lower(h, n);
      report.notes.push_back(kLowerNote);
      report.notes.push_back("tree bounds (informational): (n-1)/(2(t-1)) <= f(n,T) <= 2(n-1)/(t-1)");
      const std::uint64_t t = info.t;
      report.upper = {2 * (n - 1) / (t - 1), "informational: multicolor Ramsey bound, no construction built",
                      "floor(2(n-1)/(t-1))", false};
      break;
    }
    case Family::unsupported: unsupported(h);
  }
  return report;
}

RamseyBounds ramsey_bounds(std::uint64_t t, std::uint64_t k) {
  if (t < 1 || k < 1) throw Error(Errc::ParameterError, "need t >= 1 and k >= 1");
  RamseyBounds r;
  r.t = t;
  r.k = k;
  r.lower = (t - 1) * ((k + 1) / 2) + 1;
  r.upper = 2 * k * t + 1;
  r.epsilon = (k % 2 == 0 && t % 2 == 0) ? 1 : 2;
  r.star_exact = k * (t - 1) + r.epsilon;
  return r;
}

}  // namespace ksplit
