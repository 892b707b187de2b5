#include "critgroup/group_action.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

bool is_bijection(const std::vector<std::size_t>& image, std::size_t n) {
  if (image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t x : image) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::string describe_orbit(const Multigraph& g, const std::vector<VertexId>& orbit) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < orbit.size(); ++i) os << (i ? "," : "") << g.vertex_label(orbit[i]);
  os << '}';
  return os.str();
}

}  // namespace

VertexPermutation VertexPermutation::identity(const Multigraph& g) {
  VertexPermutation p;
  p.vertex_image_.resize(g.vertex_count());
  p.edge_image_.resize(g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.vertex_image_[v] = v;
  for (EdgeId e = 0; e < g.edge_count(); ++e) p.edge_image_[e] = e;
  return p;
}

VertexPermutation VertexPermutation::from_vertex_map(const Multigraph& g,
                                                     std::vector<VertexId> image) {
  if (!is_bijection(image, g.vertex_count())) {
    throw Error(ErrorCode::kNotAutomorphism, "vertex map is not a bijection");
  }
  std::vector<EdgeId> edge_image(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count();) {
    const auto& edge = g.edge(e);
    const auto source = g.edges_between(edge.u, edge.v);
    const auto target = g.edges_between(image[edge.u], image[edge.v]);
    if (source.size() != target.size()) {
      throw Error(ErrorCode::kNotAutomorphism,
                  "vertex map does not preserve the multiplicity of edge " +
                      g.vertex_label(edge.u) + "-" + g.vertex_label(edge.v));
    }
    for (std::size_t k = 0; k < source.size(); ++k) edge_image[source[k]] = target[k];
    e = source.back() + 1;
  }
  return from_maps(g, std::move(image), std::move(edge_image));
}

VertexPermutation VertexPermutation::from_maps(const Multigraph& g,
                                               std::vector<VertexId> vertex_image,
                                               std::vector<EdgeId> edge_image) {
  if (!is_bijection(vertex_image, g.vertex_count())) {
    throw Error(ErrorCode::kNotAutomorphism, "vertex map is not a bijection");
  }
  if (!is_bijection(edge_image, g.edge_count())) {
    throw Error(ErrorCode::kNotAutomorphism, "edge map is not a bijection");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& src = g.edge(e);
    const auto& dst = g.edge(edge_image[e]);
    const VertexId a = vertex_image[src.u];
    const VertexId b = vertex_image[src.v];
    if (!((dst.u == a && dst.v == b) || (dst.u == b && dst.v == a))) {
      throw Error(ErrorCode::kNotAutomorphism, "edge map is inconsistent with the vertex map");
    }
  }
  VertexPermutation p;
  p.vertex_image_ = std::move(vertex_image);
  p.edge_image_ = std::move(edge_image);
  return p;
}

bool VertexPermutation::is_identity() const {
  for (std::size_t i = 0; i < vertex_image_.size(); ++i)
    if (vertex_image_[i] != i) return false;
  for (std::size_t i = 0; i < edge_image_.size(); ++i)
    if (edge_image_[i] != i) return false;
  return true;
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation p;
  p.vertex_image_.resize(vertex_image_.size());
  p.edge_image_.resize(edge_image_.size());
  for (std::size_t i = 0; i < vertex_image_.size(); ++i) p.vertex_image_[vertex_image_[i]] = i;
  for (std::size_t i = 0; i < edge_image_.size(); ++i) p.edge_image_[edge_image_[i]] = i;
  return p;
}

std::size_t VertexPermutation::order() const {
  std::size_t k = 1;
  VertexPermutation power = *this;
  while (!power.is_identity()) {
    power = power * *this;
    ++k;
  }
  return k;
}

VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b) {
  if (a.degree() != b.degree() || a.edge_image_.size() != b.edge_image_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "composing permutations of different graphs");
  }
  VertexPermutation p;
  p.vertex_image_.resize(a.vertex_image_.size());
  p.edge_image_.resize(a.edge_image_.size());
  for (std::size_t i = 0; i < p.vertex_image_.size(); ++i)
    p.vertex_image_[i] = a.vertex_image_[b.vertex_image_[i]];
  for (std::size_t i = 0; i < p.edge_image_.size(); ++i)
    p.edge_image_[i] = a.edge_image_[b.edge_image_[i]];
  return p;
}

PermutationGroup generate_group(const Multigraph& g, const std::vector<VertexPermutation>& gens) {
  for (const auto& s : gens)
    if (s.degree() != g.vertex_count() || s.edge_image().size() != g.edge_count()) {
      throw Error(ErrorCode::kNotAutomorphism, "generator does not act on this graph");
    }
  std::set<VertexPermutation> seen{VertexPermutation::identity(g)};
  std::vector<VertexPermutation> frontier{VertexPermutation::identity(g)};
  while (!frontier.empty()) {
    std::vector<VertexPermutation> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        VertexPermutation q = s * p;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return PermutationGroup(seen.begin(), seen.end());
}

bool is_harmonic(const Multigraph& g, const PermutationGroup& group) {
  for (const auto& p : group) {
    if (p.is_identity()) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (p.fixes(edge.u) && p.fixes(edge.v) && p.edge(e) == e) return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> orbits(const Multigraph& g, const PermutationGroup& group) {
  std::vector<bool> placed(g.vertex_count(), false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (placed[v]) continue;
    std::set<VertexId> orbit;
    for (const auto& p : group) orbit.insert(p(v));
    orbit.insert(v);
    for (VertexId w : orbit) placed[w] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<std::vector<EdgeId>> edge_orbits(const Multigraph& g, const PermutationGroup& group) {
  std::vector<bool> placed(g.edge_count(), false);
  std::vector<std::vector<EdgeId>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (placed[e]) continue;
    std::set<EdgeId> orbit{e};
    for (const auto& p : group) orbit.insert(p.edge(e));
    for (EdgeId f : orbit) placed[f] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

PermutationGroup stabilizer(const PermutationGroup& group, VertexId v) {
  PermutationGroup out;
  for (const auto& p : group)
    if (p.fixes(v)) out.push_back(p);
  return out;
}

PermutationGroup DihedralAction::subgroup_sigma1() const {
  std::set<VertexPermutation> s{sigma1 * sigma1, sigma1};
  return PermutationGroup(s.begin(), s.end());
}

PermutationGroup DihedralAction::subgroup_sigma2() const {
  std::set<VertexPermutation> s{sigma2 * sigma2, sigma2};
  return PermutationGroup(s.begin(), s.end());
}

PermutationGroup DihedralAction::rotation_subgroup() const {
  std::set<VertexPermutation> s;
  const VertexPermutation r = rotation();
  VertexPermutation power = r * r.inverse();
  for (std::size_t k = 0; k < n; ++k) {
    s.insert(power);
    power = r * power;
  }
  return PermutationGroup(s.begin(), s.end());
}

DihedralAction make_dihedral_action(const Multigraph& g, const VertexPermutation& sigma1,
                                    const VertexPermutation& sigma2) {
  for (const auto* s : {&sigma1, &sigma2}) {
    if (s->degree() != g.vertex_count() || s->edge_image().size() != g.edge_count()) {
      throw Error(ErrorCode::kNotAutomorphism, "generator does not act on this graph");
    }
    if (s->is_identity() || !(*s * *s).is_identity()) {
      throw Error(ErrorCode::kInvalidArgument, "dihedral generators must be involutions");
    }
  }
  DihedralAction a;
  a.sigma1 = sigma1;
  a.sigma2 = sigma2;
  a.n = a.rotation().order();
  if (a.n < 2) throw Error(ErrorCode::kInvalidArgument, "sigma1 and sigma2 coincide");
  a.elements = generate_group(g, {sigma1, sigma2});
  if (a.elements.size() != 2 * a.n) {
    throw Error(ErrorCode::kInvalidArgument, "generated group does not have order 2n");
  }
  return a;
}

namespace {

// a plays the role of sigma1 in the index equations, b that of sigma2.
std::optional<OrbitLabeling> try_labeling(const Multigraph& g, const DihedralAction& action,
                                          bool swapped, std::size_t x_seed_shift) {
  const VertexPermutation& a = swapped ? action.sigma2 : action.sigma1;
  const VertexPermutation& b = swapped ? action.sigma1 : action.sigma2;
  const VertexPermutation r = b * a;
  const std::size_t n = action.n;

  OrbitLabeling lab;
  lab.n = n;
  lab.swapped = swapped;
  for (const auto& orbit : orbits(g, action.elements)) {
    if (orbit.size() == 2 * n) {
      VertexId seed = orbit.front();
      for (std::size_t k = 0; k < x_seed_shift % n; ++k) seed = r(seed);
      std::vector<VertexId> xs(n), ys(n);
      xs[0] = seed;
      for (std::size_t i = 1; i < n; ++i) xs[i] = r(xs[i - 1]);
      for (std::size_t k = 0; k < n; ++k) ys[k] = a(xs[n - 1 - k]);
      lab.x.push_back(std::move(xs));
      lab.y.push_back(std::move(ys));
    } else {
      auto fixed = std::find_if(orbit.begin(), orbit.end(), [&](VertexId v) { return b.fixes(v); });
      if (fixed == orbit.end()) return std::nullopt;
      std::vector<VertexId> zs(n);
      zs[0] = *fixed;
      for (std::size_t i = 1; i < n; ++i) zs[i] = r(zs[i - 1]);
      lab.z.push_back(std::move(zs));
    }
  }
  if (!labeling_satisfies_equations(action, lab)) return std::nullopt;
  return lab;
}

}  // namespace

bool labeling_satisfies_equations(const DihedralAction& action, const OrbitLabeling& lab) {
  const VertexPermutation& a = lab.swapped ? action.sigma2 : action.sigma1;
  const VertexPermutation& b = lab.swapped ? action.sigma1 : action.sigma2;
  const std::size_t n = lab.n;
  if (n != action.n || lab.x.size() != lab.y.size()) return false;
  const std::size_t vertices = action.sigma1.degree();
  std::vector<int> seen(vertices, 0);
  auto mark = [&](const std::vector<std::vector<VertexId>>& rows) {
    for (const auto& row : rows) {
      if (row.size() != n) return false;
      for (VertexId v : row) {
        if (v >= vertices) return false;
        ++seen[v];
      }
    }
    return true;
  };
  if (!mark(lab.z) || !mark(lab.x) || !mark(lab.y)) return false;
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;

  for (const auto& z : lab.z)
    for (std::size_t i = 0; i < n; ++i) {
      if (a(z[i]) != z[(2 * n - 1 - i) % n]) return false;
      if (b(z[i]) != z[(n - i) % n]) return false;
    }
  for (std::size_t j = 0; j < lab.x.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (a(lab.x[j][i]) != lab.y[j][(2 * n - 1 - i) % n]) return false;
      if (b(lab.x[j][i]) != lab.y[j][(n - i) % n]) return false;
      if (a(lab.y[j][i]) != lab.x[j][(2 * n - 1 - i) % n]) return false;
      if (b(lab.y[j][i]) != lab.x[j][(n - i) % n]) return false;
    }
  return true;
}

OrbitLabeling classify_dihedral_orbits(const Multigraph& g, const DihedralAction& action,
                                       std::size_t x_seed_shift) {
  if (!is_harmonic(g, action.elements)) {
    throw Error(ErrorCode::kNonHarmonic, "the dihedral action is not harmonic");
  }
  for (const auto& orbit : orbits(g, action.elements)) {
    if (orbit.size() != action.n && orbit.size() != 2 * action.n) {
      std::ostringstream os;
      os << "orbit " << describe_orbit(g, orbit) << " has " << orbit.size()
         << " points; every orbit must have " << action.n << " or " << 2 * action.n;
      throw Error(ErrorCode::kOrbitSize, os.str());
    }
  }
  if (auto lab = try_labeling(g, action, false, x_seed_shift)) return *lab;
  if (auto lab = try_labeling(g, action, true, x_seed_shift)) return *lab;
  throw Error(ErrorCode::kLabelingImpossible,
              "size-n orbits are stabilised by reflections from both conjugacy classes; the "
              "index equations cannot be satisfied under either generator assignment");
}

}  // namespace critgroup
