#include "ksplit/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "ksplit/error.hpp"

namespace ksplit {

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t t) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (t + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

namespace {

// Runs body(i) for i in [begin, end) across up to `threads` workers.
template <typename Body>
void parallel_range(std::size_t begin, std::size_t end, unsigned threads, Body&& body) {
  const std::size_t count = end - begin;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1U), count));
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = begin + w; i < end; i += workers) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

void draw_coloring(std::mt19937_64& rng, std::size_t n, std::vector<std::uint32_t>& colors) {
  for (auto& c : colors) c = static_cast<std::uint32_t>(uniform_below(rng, n));
}

}  // namespace

// ---------------------------------------------------------------------------

JansonDiagnostics janson_diagnostics(const Graph& host, std::size_t n) {
  if (n < 2) throw Error(Errc::ParameterError, "need n >= 2 colors");
  if (host.edge_count() == 0) throw Error(Errc::DegenerateHost, "host graph has no edges");
  JansonDiagnostics d;
  d.M = host.edge_count();
  d.N = host.vertex_count();
  d.n = n;
  d.Delta = host.max_degree();
  const long double nn = static_cast<long double>(n);
  d.mu = 2.0L * static_cast<long double>(d.M) / (nn * nn);
  std::uint64_t wedges = 0;  // sum_u C(deg u, 2), exact
  for (std::size_t v = 0; v < d.N; ++v) {
    const std::uint64_t deg = host.degree(static_cast<Vertex>(v));
    wedges += deg * (deg - (deg > 0 ? 1 : 0)) / 2;
  }
  d.D = 2.0L * static_cast<long double>(wedges) / (nn * nn * nn);
  const long double delta = static_cast<long double>(d.Delta);
  d.D_estimate = static_cast<long double>(d.N) * delta * delta / (nn * nn * nn);
  const long double exponent = d.D > 0 ? std::min(d.mu * d.mu / (48.0L * d.D), d.mu / 4.0L) : d.mu / 4.0L;
  d.bound_pair = std::exp(-exponent);
  d.bound_union = std::min(1.0L, nn * (nn - 1) / 2.0L * d.bound_pair);
  d.condition_flag = 2.0L * static_cast<long double>(d.M) >= 12.0L * nn * nn * std::log(nn);
  return d;
}

ConcentrationReport concentration_report(std::size_t N, std::size_t n) {
  if (n < 2 || N < n) {
    throw Error(Errc::ParameterError, "need n >= 2 and N >= n, got N=" + std::to_string(N) + " n=" +
                                          std::to_string(n));
  }
  ConcentrationReport r;
  r.N = N;
  r.n = n;
  r.k = static_cast<long double>(N) / static_cast<long double>(n);
  const long double log_n = std::log(static_cast<long double>(n));
  r.epsilon = log_n / std::sqrt(r.k);
  r.size_cap = r.k + std::sqrt(r.k) * log_n;
  r.per_class_bound = std::exp(-r.epsilon * r.epsilon * r.k / 3.0L);
  r.union_bound = static_cast<long double>(n) * r.per_class_bound;
  return r;
}

// ---------------------------------------------------------------------------

PairFailureEstimate estimate_pair_failure(const Graph& host, std::size_t n, std::size_t samples,
                                          std::uint64_t seed, unsigned threads) {
  if (samples < 1) throw Error(Errc::ParameterError, "need samples >= 1");
  if (n < 2) throw Error(Errc::ParameterError, "need n >= 2 colors");
  const std::size_t batches = (samples + kEstimateBatch - 1) / kEstimateBatch;
  std::vector<std::size_t> failures(batches, 0);
  parallel_range(0, batches, threads, [&](std::size_t batch) {
    std::mt19937_64 rng(child_seed(seed, batch));
    std::vector<std::uint32_t> colors(host.vertex_count());
    const std::size_t first = batch * kEstimateBatch;
    const std::size_t last = std::min(samples, first + kEstimateBatch);
    for (std::size_t s = first; s < last; ++s) {
      draw_coloring(rng, n, colors);
      const bool hit = std::any_of(host.edges().begin(), host.edges().end(), [&](const Edge& e) {
        return colors[e.u] + colors[e.v] == 1;
      });
      if (!hit) ++failures[batch];
    }
  });
  PairFailureEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.failures = std::accumulate(failures.begin(), failures.end(), std::size_t{0});
  out.estimate = static_cast<double>(out.failures) / static_cast<double>(samples);
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

enum class TrialOutcome : std::uint8_t { accepted, size_violation, missing_pair };

TrialOutcome run_trial(const Graph& host, std::size_t n, std::size_t k_cap, std::uint64_t trial_seed,
                       std::vector<std::uint32_t>& colors, std::vector<std::size_t>& sizes,
                       std::vector<char>& covered) {
  std::mt19937_64 rng(trial_seed);
  draw_coloring(rng, n, colors);
  std::fill(sizes.begin(), sizes.end(), 0);
  for (std::uint32_t c : colors) ++sizes[c];
  for (std::size_t s : sizes) {
    if (s == 0 || s > k_cap) return TrialOutcome::size_violation;
  }
  const std::size_t needed = n * (n - 1) / 2;
  std::size_t have = 0;
  std::fill(covered.begin(), covered.end(), 0);
  for (const Edge& e : host.edges()) {
    if (have == needed) break;
    std::size_t a = colors[e.u], b = colors[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    char& slot = covered[a * n + b];
    if (!slot) {
      slot = 1;
      ++have;
    }
  }
  return have == needed ? TrialOutcome::accepted : TrialOutcome::missing_pair;
}

}  // namespace

RandomSplitResult random_split(const Graph& host, std::size_t n, std::size_t k_cap, std::size_t trials,
                               std::uint64_t seed, unsigned threads) {
  if (n < 1) throw Error(Errc::ParameterError, "need n >= 1");
  if (k_cap < 1) throw Error(Errc::ParameterError, "need k_cap >= 1");
  if (trials < 1) throw Error(Errc::ParameterError, "need trials >= 1");
  if (n > (std::size_t{1} << 12)) throw Error(Errc::ParameterError, "n is too large for the pair table");

  const unsigned workers = std::max(threads, 1U);
  const std::size_t chunk = std::size_t{workers} * 64;
  std::vector<TrialOutcome> outcomes(trials);
  std::size_t accepted = trials;
  // Per-worker scratch; trials write only their own outcome slot.
  std::vector<std::vector<std::uint32_t>> colors(workers, std::vector<std::uint32_t>(host.vertex_count()));
  std::vector<std::vector<std::size_t>> sizes(workers, std::vector<std::size_t>(n));
  std::vector<std::vector<char>> covered(workers, std::vector<char>(n * n));
  for (std::size_t begin = 0; begin < trials && accepted == trials; begin += chunk) {
    const std::size_t end = std::min(trials, begin + chunk);
    const std::size_t span = end - begin;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, span));
    parallel_range(0, used, used, [&](std::size_t w) {
      for (std::size_t t = begin + w; t < end; t += used) {
        outcomes[t] = run_trial(host, n, k_cap, child_seed(seed, t), colors[w], sizes[w], covered[w]);
      }
    });
    for (std::size_t t = begin; t < end; ++t) {
      if (outcomes[t] == TrialOutcome::accepted) {
        accepted = t;
        break;
      }
    }
  }

  if (accepted < trials) {
    std::vector<std::uint32_t> coloring(host.vertex_count());
    std::mt19937_64 rng(child_seed(seed, accepted));
    draw_coloring(rng, n, coloring);
    std::vector<std::size_t> class_sizes(n, 0);
    for (std::uint32_t c : coloring) ++class_sizes[c];
    const std::size_t k = *std::max_element(class_sizes.begin(), class_sizes.end());
    const SplitGraph lax(host, std::vector<BlobId>(coloring.begin(), coloring.end()), n, k);
    return RandomSplitSuccess{prune_to_split(lax), accepted, seed};
  }

  FailureStats stats;
  stats.trials = trials;
  stats.seed = seed;
  stats.reasons.reserve(trials);
  for (TrialOutcome o : outcomes) {
    if (o == TrialOutcome::size_violation) {
      ++stats.size_violations;
      stats.reasons.push_back(TrialFailure::size_violation);
    } else {
      ++stats.missing_pairs;
      stats.reasons.push_back(TrialFailure::missing_pair);
    }
  }
  if (n >= 2 && host.edge_count() > 0) stats.diagnostics = janson_diagnostics(host, n);
  if (n >= 2 && host.vertex_count() >= n) stats.concentration = concentration_report(host.vertex_count(), n);
  return stats;
}

// ---------------------------------------------------------------------------

TuranProfile TuranProfile::single(double r, double C, double C_prime) {
  TuranProfile p{r, r, C, C_prime, r};
  p.validate();
  return p;
}

void TuranProfile::validate() const {
  if (!(1.0 < a && a <= b && b < 2.0)) {
    throw Error(Errc::ParameterError, "Turan exponents need 1 < a <= b < 2");
  }
  if (!(C > 0 && C_prime > 0)) throw Error(Errc::ParameterError, "Turan constants must be positive");
  if (r && (*r != a || *r != b)) throw Error(Errc::ParameterError, "single exponent r requires a = b = r");
}

bool TuranProfile::gap_condition() const noexcept { return b - a < (2 - b) * (b - 1) / (5 - b); }

double trim_lemma_constant(const TuranProfile& profile) {
  const double inv = 1.0 / (profile.b - 1.0);
  return std::pow(profile.C_prime, inv) * std::pow(2.0, (profile.b + 1.0) * inv + 1.0);
}

std::size_t trim_q(std::size_t ell, double ex, const TuranProfile& profile) {
  const double inv = 1.0 / (profile.b - 1.0);
  const double raw = trim_lemma_constant(profile) * std::pow(std::pow(static_cast<double>(ell), profile.b) / ex, inv);
  const double capped = std::min(std::floor(raw), 1e15);
  return std::max<std::size_t>(3, static_cast<std::size_t>(capped));
}

TrimResult trim_max_degree(const Graph& g, const TuranProfile& profile, const TrimOptions& options) {
  profile.validate();
  const std::size_t ell = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (ell < 3 || m < 1) throw Error(Errc::ParameterError, "trimming needs >= 3 vertices and >= 1 edge");
  if (options.forced_q && *options.forced_q < 3) throw Error(Errc::ParameterError, "q must be >= 3");
  if (options.ex && !(*options.ex > 0)) throw Error(Errc::ParameterError, "ex must be positive");

  TrimResult result;
  result.ell = ell;
  result.m = m;
  result.ex = options.ex.value_or(2.0 * static_cast<double>(m));
  result.lemma_constant = trim_lemma_constant(profile);
  result.q = options.forced_q.value_or(trim_q(ell, result.ex, profile));
  const std::size_t q = result.q;
  result.degree_cap = static_cast<double>(q) * static_cast<double>(m) / static_cast<double>(ell);

  std::vector<Vertex> by_degree(ell);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  const std::size_t top_size = (ell + q - 1) / q;
  result.top_set.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(top_size));
  std::sort(result.top_set.begin(), result.top_set.end());
  std::vector<char> in_top(ell, 0);
  for (Vertex v : result.top_set) {
    in_top[v] = 1;
    result.degree_sum_a1 += g.degree(v);
  }

  if (2 * result.degree_sum_a1 < m) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
      if (!in_top[e.u] && !in_top[e.v]) kept.push_back(e);
    }
    Graph trimmed(ell, std::move(kept));
    if (2 * trimmed.edge_count() <= m ||
        static_cast<double>(trimmed.max_degree()) > result.degree_cap) {
      throw Error(Errc::InvariantViolation, "case 2 output violates the trimming guarantees");
    }
    result.trimmed = std::move(trimmed);
    return result;
  }

  Case1Certificate cert;
  cert.q = q;
  cert.degree_sum_a1 = result.degree_sum_a1;
  cert.parts.push_back(result.top_set);
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < ell; ++v) {
    if (!in_top[v]) rest.push_back(static_cast<Vertex>(v));
  }
  const std::size_t base = rest.size() / (q - 1);
  const std::size_t extra = rest.size() % (q - 1);
  std::vector<std::size_t> part_of(ell, 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i + 1 < q; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    cert.parts.emplace_back(rest.begin() + static_cast<std::ptrdiff_t>(next),
                            rest.begin() + static_cast<std::ptrdiff_t>(next + size));
    for (std::size_t x = next; x < next + size; ++x) part_of[rest[x]] = i + 1;
    next += size;
  }
  std::vector<std::size_t> cross(q, 0), internal(q, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t pu = part_of[e.u], pv = part_of[e.v];
    if (pu == pv) {
      ++internal[pu];
    } else if (pu == 0 || pv == 0) {
      ++cross[pu == 0 ? pv : pu];
    }
  }
  std::size_t best = 1;
  for (std::size_t i = 2; i < q; ++i) {
    if (cross[i] > cross[best]) best = i;
  }
  cert.j = best + 1;
  cert.internal_a1 = internal[0];
  cert.cross_a1_aj = cross[best];
  cert.union_edges = internal[0] + cross[best] + internal[best];
  cert.lower_bound = static_cast<double>(m) / (2.0 * static_cast<double>(q - 1));
  if (static_cast<double>(cert.union_edges) < cert.lower_bound) {
    throw Error(Errc::InvariantViolation, "case 1 certificate below the pigeonhole bound");
  }
  result.case1 = std::move(cert);
  return result;
}

}  // namespace ksplit
