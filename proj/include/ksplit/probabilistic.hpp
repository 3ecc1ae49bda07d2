#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "ksplit/graph.hpp"

namespace ksplit {

// Seed of trial (or batch) t under the run seed: splitmix64 of
// seed + golden_gamma * (t + 1). Every random stream in the library is a
// std::mt19937_64 seeded with such a child seed.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t t) noexcept;

// Uniform value in [0, bound) by rejection; platform independent, unlike
// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Quantities for the event "no host edge joins colors 0 and 1" under a
// uniform n-coloring of the host's vertices. Logarithms are natural.
struct JansonDiagnostics {
  std::size_t M = 0;      // host edges
  std::size_t N = 0;      // host vertices
  std::size_t n = 0;      // colors
  std::size_t Delta = 0;  // host max degree
  long double mu = 0;     // 2M / n^2
  long double D = 0;      // (2 / n^3) * sum_u C(deg u, 2)
  long double D_estimate = 0;  // N * Delta^2 / n^3
  long double bound_pair = 0;  // exp(-min(mu^2 / 48D, mu / 4)); D = 0 uses mu / 4
  long double bound_union = 0; // min(1, C(n,2) * bound_pair)
  bool condition_flag = false; // 2M >= 12 n^2 ln n
};

JansonDiagnostics janson_diagnostics(const Graph& host, std::size_t n);

struct ConcentrationReport {
  std::size_t N = 0;
  std::size_t n = 0;
  long double k = 0;  // N / n
  long double epsilon = 0;            // k^(-1/2) ln n
  long double size_cap = 0;           // k + sqrt(k) ln n
  long double per_class_bound = 0;    // exp(-epsilon^2 k / 3)
  long double union_bound = 0;        // n * per_class_bound
};

ConcentrationReport concentration_report(std::size_t N, std::size_t n);

struct PairFailureEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kEstimateBatch = 4096;

// Monte Carlo estimate of Pr(no edge colored {0, 1}). Sample batches of
// kEstimateBatch use child_seed(seed, batch), so the result does not depend
// on the thread count.
PairFailureEstimate estimate_pair_failure(const Graph& host, std::size_t n, std::size_t samples,
                                          std::uint64_t seed, unsigned threads = 1);

enum class TrialFailure : std::uint8_t { size_violation, missing_pair };

struct FailureStats {
  std::size_t trials = 0;
  std::size_t size_violations = 0;
  std::size_t missing_pairs = 0;
  std::vector<TrialFailure> reasons;  // per trial, in trial order
  std::optional<JansonDiagnostics> diagnostics;
  std::optional<ConcentrationReport> concentration;
  std::uint64_t seed = 0;
};

struct RandomSplitSuccess {
  SplitGraph split;
  std::size_t trial = 0;  // accepting trial index
  std::uint64_t seed = 0;
};

using RandomSplitResult = std::variant<RandomSplitSuccess, FailureStats>;

// Rejection sampling over uniform vertex colorings; trial t uses
// child_seed(seed, t) and the lowest accepting trial wins.
RandomSplitResult random_split(const Graph& host, std::size_t n, std::size_t k_cap, std::size_t trials,
                               std::uint64_t seed, unsigned threads = 1);

struct TuranProfile {
  double a = 0;
  double b = 0;
  double C = 0;
  double C_prime = 0;
  std::optional<double> r;

  static TuranProfile single(double r, double C, double C_prime);
  void validate() const;
  bool gap_condition() const noexcept;  // b - a < (2-b)(b-1)/(5-b)
};

struct TrimOptions {
  std::optional<std::size_t> forced_q;  // skips the q formula
  std::optional<double> ex;             // defaults to 2m
};

struct Case1Certificate {
  std::size_t q = 0;
  std::vector<std::vector<Vertex>> parts;  // A_1 .. A_q
  std::size_t j = 0;                       // 1-based index of the best partner part
  std::size_t degree_sum_a1 = 0;
  std::size_t internal_a1 = 0;    // |E(G[A_1])|
  std::size_t cross_a1_aj = 0;    // e(A_1, A_j)
  std::size_t union_edges = 0;    // |E(G[A_1 u A_j])|
  double lower_bound = 0;         // m / (2(q-1))
};

struct TrimResult {
  std::size_t q = 0;
  double lemma_constant = 0;  // C' ^ (1/(b-1)) * 2 ^ ((b+1)/(b-1) + 1)
  double ex = 0;
  std::size_t m = 0;
  std::size_t ell = 0;
  std::vector<Vertex> top_set;  // A_1
  std::size_t degree_sum_a1 = 0;
  std::optional<Graph> trimmed;          // case 2
  std::optional<Case1Certificate> case1; // case 1
  double degree_cap = 0;                 // q * m / ell
};

std::size_t trim_q(std::size_t ell, double ex, const TuranProfile& profile);
double trim_lemma_constant(const TuranProfile& profile);
TrimResult trim_max_degree(const Graph& g, const TuranProfile& profile, const TrimOptions& options = {});

}  // namespace ksplit
