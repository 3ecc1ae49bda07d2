#include "ksplit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ksplit/error.hpp"
#include "text_io.hpp"

namespace ksplit {

PrimeSearch next_prime(std::uint64_t k) {
  if (k < 2) throw Error(Errc::ParameterError, "next_prime needs k >= 2");
  std::uint64_t p = k;
  while (!is_prime(p)) ++p;
  const double k_d = static_cast<double>(k);
  return {p, static_cast<double>(p) <= k_d + std::pow(k_d, 0.6)};
}

// ---------------------------------------------------------------------------

namespace {

Field plane_field(std::uint32_t p) {
  Field f = Field::quadratic(p);  // CompositeCharacteristic first
  if (p > AffinePlane::kMaxPrime) {
    throw Error(Errc::TooLarge, "p = " + std::to_string(p) + " exceeds the size guard p <= " +
                                    std::to_string(AffinePlane::kMaxPrime));
  }
  return f;
}

}  // namespace

AffinePlane::AffinePlane(std::uint32_t p) : field_(plane_field(p)) {}

Vertex AffinePlane::point_vertex(FieldElement x, FieldElement y) const noexcept {
  return field_.index_of(x) * q() + field_.index_of(y);
}

Vertex AffinePlane::line_vertex(FieldElement m, FieldElement b) const noexcept {
  return static_cast<Vertex>(point_count()) + field_.index_of(m) * q() + field_.index_of(b);
}

bool AffinePlane::incident(FieldElement x, FieldElement y, FieldElement m, FieldElement b) const {
  return field_.add(field_.mul(m, x), b) == y;
}

Graph AffinePlane::incidence_graph() const {
  const std::uint32_t order = q();
  const auto elements = field_.enumerate();
  // mul_table[m][x] = index of m*x
  std::vector<std::uint32_t> mul_table(std::size_t{order} * order);
  for (std::uint32_t m = 0; m < order; ++m) {
    for (std::uint32_t x = 0; x < order; ++x) {
      mul_table[std::size_t{m} * order + x] = field_.index_of(field_.mul(elements[m], elements[x]));
    }
  }
  const std::uint32_t p = this->p();
  const auto sub_index = [p](std::uint32_t a, std::uint32_t b) {
    return (a % p + p - b % p) % p + p * ((a / p + p - b / p) % p);
  };
  std::vector<Edge> edges;
  edges.reserve(std::size_t{order} * order * order);
  // Point (x, y) lies on the line of slope m with intercept b = y - m*x.
  // Lines through a point come out in ascending vertex order, so the edge
  // list is already sorted.
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t y = 0; y < order; ++y) {
      const Vertex point = x * order + y;
      for (std::uint32_t m = 0; m < order; ++m) {
        const std::uint32_t b = sub_index(y, mul_table[std::size_t{m} * order + x]);
        edges.push_back({point, static_cast<Vertex>(point_count()) + m * order + b});
      }
    }
  }
  return Graph(2 * point_count(), std::move(edges));
}

AffinePlane build_affine_plane(std::uint32_t p) { return AffinePlane(p); }

// ---------------------------------------------------------------------------

BlobScheme::BlobScheme(const Field& field) : p(field.characteristic()) {
  for (std::uint32_t h = 0; h < p; ++h) subgroup.push_back({h, 0});
  // First element of each coset, scanning the field in canonical order.
  std::vector<char> covered(field.order(), 0);
  for (const FieldElement& a : field.enumerate()) {
    if (covered[field.index_of(a)]) continue;
    representatives.push_back(a);
    for (const FieldElement& h : subgroup) covered[field.index_of(field.add(a, h))] = 1;
  }
}

bool BlobScheme::cosets_partition(const Field& field) const {
  std::vector<int> hits(field.order(), 0);
  for (const FieldElement& a : representatives) {
    for (const FieldElement& h : subgroup) ++hits[field.index_of(field.add(a, h))];
  }
  return std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
}

SplitGraph build_affine_split(std::uint32_t p) {
  const AffinePlane plane(p);
  const Field& field = plane.field();
  const BlobScheme scheme(field);
  if (scheme.representatives.size() != p || !scheme.cosets_partition(field)) {
    throw Error(Errc::InvariantViolation, "coset representatives do not partition the field");
  }
  // For each field element z, the unique (a, h) with z = a + h.
  std::vector<std::uint32_t> coset_of(field.order()), offset_of(field.order());
  for (std::uint32_t ai = 0; ai < p; ++ai) {
    for (std::uint32_t hi = 0; hi < p; ++hi) {
      const auto z = field.index_of(field.add(scheme.representatives[ai], scheme.subgroup[hi]));
      coset_of[z] = ai;
      offset_of[z] = hi;
    }
  }
  const std::uint32_t q = plane.q();
  std::vector<BlobId> blob_of(2 * plane.point_count());
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) blob_of[x * q + y] = x * p + offset_of[y];  // point blob (x, h)
  }
  for (std::uint32_t m = 0; m < q; ++m) {
    for (std::uint32_t b = 0; b < q; ++b) {
      blob_of[plane.point_count() + m * q + b] = m * p + coset_of[b];  // line blob (m, a)
    }
  }
  const std::size_t n = std::size_t{p} * p * p;
  return SplitGraph(plane.incidence_graph(), std::move(blob_of), n, 2 * std::size_t{p});
}

// ---------------------------------------------------------------------------

C4PipelineParameters c4_pipeline_parameters(std::uint64_t n) {
  if (n < 8) throw Error(Errc::ParameterError, "c4 pipeline needs n >= 8, got " + std::to_string(n));
  if (n > (std::uint64_t{1} << 40)) throw Error(Errc::ParameterError, "n is out of range");
  using u128 = unsigned __int128;
  C4PipelineParameters out;
  out.n = n;
  // smallest N with N^3 >= n^2
  const u128 n_sq = u128{n} * n;
  auto big_n = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n_sq)));
  while (big_n > 0 && u128{big_n - 1} * (big_n - 1) * (big_n - 1) >= n_sq) --big_n;
  while (u128{big_n} * big_n * big_n < n_sq) ++big_n;
  out.big_n = big_n;
  auto k0 = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(big_n)));
  while (k0 > 0 && (k0 - 1) * (k0 - 1) >= big_n) --k0;
  while (k0 * k0 < big_n) ++k0;
  out.k0 = k0;
  auto prime = next_prime(std::max<std::uint64_t>(k0, 2));
  out.p = prime.p;
  out.within_gap = prime.within_gap;
  while (u128{out.p} * out.p * out.p < n) {
    if (out.retries == 2) {
      throw Error(Errc::PipelineUnderflow,
                  "p^3 < n for p = " + std::to_string(out.p) + " after two retries");
    }
    ++out.retries;
    out.p = next_prime(out.p + 1).p;
  }
  return out;
}

SplitGraph construct_c4_free_split(std::uint64_t n) {
  const auto params = c4_pipeline_parameters(n);
  if (params.p > AffinePlane::kMaxPrime) {
    throw Error(Errc::SizeGuard, "n = " + std::to_string(n) + " needs p = " + std::to_string(params.p) +
                                     ", above the size guard p <= " + std::to_string(AffinePlane::kMaxPrime));
  }
  const auto full = build_affine_split(static_cast<std::uint32_t>(params.p));
  return prune_to_split(restrict_blobs(full, n));
}

SplitGraph build_bipartite_split(std::size_t n) {
  if (n < 2) throw Error(Errc::ParameterError, "bipartite split needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * j + 1)});
    }
  }
  std::vector<BlobId> blob_of(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) blob_of[v] = static_cast<BlobId>(v / 2);
  return SplitGraph(Graph(2 * n, std::move(edges)), std::move(blob_of), n, 2);
}

// ---------------------------------------------------------------------------

EdgeColoring::EdgeColoring(std::size_t n, std::size_t colors)
    : n_(n), colors_(colors), pair_color_(n * (n > 0 ? n - 1 : 0) / 2, kUnset) {
  if (n < 1) throw Error(Errc::ParameterError, "coloring needs n >= 1");
  if (colors < 1) throw Error(Errc::ParameterError, "coloring needs at least one color");
}

std::size_t EdgeColoring::index(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) {
    throw Error(Errc::ParameterError, "invalid pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (i > j) std::swap(i, j);
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

std::uint32_t EdgeColoring::color(std::size_t i, std::size_t j) const { return pair_color_[index(i, j)]; }

void EdgeColoring::set(std::size_t i, std::size_t j, std::uint32_t color) {
  if (color >= colors_) {
    throw Error(Errc::ParameterError, "color " + std::to_string(color) + " >= " + std::to_string(colors_));
  }
  pair_color_[index(i, j)] = color;
}

bool EdgeColoring::complete() const noexcept {
  return std::none_of(pair_color_.begin(), pair_color_.end(), [](std::uint32_t c) { return c == kUnset; });
}

Graph EdgeColoring::color_class(std::uint32_t c) const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (color(i, j) == c) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph(n_, std::move(edges));
}

std::size_t EdgeColoring::used_colors() const {
  std::vector<char> used(colors_, 0);
  for (std::uint32_t c : pair_color_) {
    if (c != kUnset) used[c] = 1;
  }
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
}

void write_coloring(const EdgeColoring& c, std::ostream& out) {
  std::string buffer = "coloring 1\n";
  buffer += "n " + std::to_string(c.n()) + " colors " + std::to_string(c.colors()) + "\n";
  for (std::size_t i = 0; i < c.n(); ++i) {
    for (std::size_t j = i + 1; j < c.n(); ++j) {
      if (c.color(i, j) == EdgeColoring::kUnset) continue;
      buffer += "c ";
      detail::append_number(buffer, i);
      buffer += ' ';
      detail::append_number(buffer, j);
      buffer += ' ';
      detail::append_number(buffer, c.color(i, j));
      buffer += '\n';
    }
  }
  out << buffer;
}

EdgeColoring read_coloring(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  detail::expect_header(reader, line, "coloring");
  if (!reader.next(line)) reader.fail("missing size line");
  const auto sizes = detail::parse_keyed(reader, line, {"n", "colors"});
  if (sizes[0] < 1 || sizes[1] < 1) reader.fail("n and colors must be positive");
  EdgeColoring coloring(sizes[0], sizes[1]);
  std::pair<std::uint64_t, std::uint64_t> last{0, 0};
  bool first = true;
  while (reader.next(line)) {
    const auto t = detail::split_tokens(line);
    if (t.size() != 4 || t[0] != "c") reader.fail("expected 'c <i> <j> <color>'");
    const std::uint64_t i = detail::parse_number(reader, t[1]);
    const std::uint64_t j = detail::parse_number(reader, t[2]);
    const std::uint64_t color = detail::parse_number(reader, t[3]);
    if (i >= j || j >= sizes[0]) reader.fail("pair must satisfy i < j < n");
    if (color >= sizes[1]) reader.fail("color " + std::to_string(color) + " out of range");
    if (!first && !(last < std::pair{i, j})) reader.fail("pairs must be strictly lexicographically sorted");
    last = {i, j};
    first = false;
    coloring.set(i, j, static_cast<std::uint32_t>(color));
  }
  return coloring;
}

EdgeColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "' for reading");
  return read_coloring(in);
}

SplitGraph build_split_from_coloring(const EdgeColoring& c) {
  if (!c.complete()) throw Error(Errc::ColoringIncomplete, "some pair of K_n has no color");
  const std::size_t n = c.n();
  const std::size_t k = c.colors();
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t layer = c.color(i, j);
      edges.push_back({static_cast<Vertex>(i * k + layer), static_cast<Vertex>(j * k + layer)});
    }
  }
  std::vector<BlobId> blob_of(n * k);
  for (std::size_t v = 0; v < n * k; ++v) blob_of[v] = static_cast<BlobId>(v / k);
  return SplitGraph(Graph(n * k, std::move(edges)), std::move(blob_of), n, k);
}

EdgeColoring round_robin_coloring(std::size_t n) {
  if (n < 2) throw Error(Errc::ParameterError, "round robin needs n >= 2");
  // Odd n plays against a phantom vertex n, whose pairs are dropped.
  const std::size_t m = n % 2 == 0 ? n : n + 1;
  const std::size_t rounds = m - 1;
  EdgeColoring coloring(n, rounds);
  for (std::size_t r = 0; r < rounds; ++r) {
    if (m - 1 < n) coloring.set(m - 1, r, static_cast<std::uint32_t>(r));
    for (std::size_t i = 1; i < m / 2; ++i) {
      const std::size_t a = (r + i) % rounds;
      const std::size_t b = (r + rounds - i) % rounds;
      if (a < n && b < n) coloring.set(a, b, static_cast<std::uint32_t>(r));
    }
  }
  return coloring;
}

std::size_t star_split_k(std::size_t n, std::size_t t) {
  if (n < 3 || t < 2) {
    throw Error(Errc::ParameterError, "star split needs n >= 3 and t >= 2, got n=" + std::to_string(n) +
                                          " t=" + std::to_string(t));
  }
  const std::size_t rounds = n % 2 == 0 ? n - 1 : n;
  return (rounds + t - 2) / (t - 1);
}

SplitGraph build_star_free_split(std::size_t n, std::size_t t) {
  const std::size_t k = star_split_k(n, t);
  const EdgeColoring rounds = round_robin_coloring(n);
  const std::size_t round_count = rounds.colors();
  // Equitable grouping: the first (R mod k) groups take one extra round.
  const std::size_t base = round_count / k;
  const std::size_t extra = round_count % k;
  std::vector<std::uint32_t> group_of(round_count);
  std::size_t r = 0;
  for (std::size_t g = 0; g < k; ++g) {
    const std::size_t size = base + (g < extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) group_of[r++] = static_cast<std::uint32_t>(g);
  }
  EdgeColoring grouped(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) grouped.set(i, j, group_of[rounds.color(i, j)]);
  }
  return build_split_from_coloring(grouped);
}

}  // namespace ksplit
