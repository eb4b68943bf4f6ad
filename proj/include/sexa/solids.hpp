#pragma once

// Volume formulas for the solids that appear in Old Babylonian and Elamite
// volume problems, plus a few general ones they specialise.
//
// Formulas free of π and radicals are evaluated exactly over SexRational.
// The regular n-gon frustum (n != 4), slope angles and solids of rotation
// are evaluated in a caller-chosen floating type, 50 decimal digits by
// default. All lengths are in nindan; volumes come out in nindan³.

#include "sexa/metrology.hpp"
#include "sexa/sexagesimal.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sexa {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

class InvalidSolid : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class Real>
Real to_real(const SexRational& q) {
  return static_cast<Real>(q.numerator()) / static_cast<Real>(q.denominator());
}

namespace detail {

inline void require_positive(const SexRational& v, std::string_view what) {
  if (v.sign() <= 0) throw InvalidSolid(std::string(what) + " must be positive");
}

inline void require_nonnegative(const SexRational& v, std::string_view what) {
  if (v.sign() < 0) throw InvalidSolid(std::string(what) + " must not be negative");
}

}  // namespace detail

struct Cuboid {
  SexRational a, b, c;
  friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

struct PrismSpec {
  SexRational base_area, h;
  friend bool operator==(const PrismSpec&, const PrismSpec&) = default;
};

struct PyramidSpec {
  SexRational base_area, h;
  friend bool operator==(const PyramidSpec&, const PyramidSpec&) = default;
};

/// Square base of side a, square top of side b, a > b.
struct SquareFrustum {
  SexRational a, b, h;
  friend bool operator==(const SquareFrustum&, const SquareFrustum&) = default;
};

/// Regular n-gon base of side a and top of side b, a > b.
struct NgonFrustum {
  int n = 4;
  SexRational a, b, h;
  friend bool operator==(const NgonFrustum&, const NgonFrustum&) = default;
};

/// A triangular prism of ridge x flanked by two rectangular pyramids of
/// lengths x1 and x2. Width y, height h; base length is x + x1 + x2.
struct TruncatedTriangularPrism {
  SexRational x, x1, x2, y, h;

  SexRational length() const { return x + x1 + x2; }
  friend bool operator==(const TruncatedTriangularPrism&,
                         const TruncatedTriangularPrism&) = default;
};

/// Grain heap of top length x and height h whose sloping faces rise
/// `slope` per unit of horizontal run (1 means 45°).
struct GrainHeap {
  SexRational x, h;
  SexRational slope{1};
  friend bool operator==(const GrainHeap&, const GrainHeap&) = default;
};

struct RotationSolid {
  enum class Kind { sphere, cylinder, cone };
  Kind kind = Kind::sphere;
  SexRational r;
  SexRational h{1};  // unused for spheres
  friend bool operator==(const RotationSolid&, const RotationSolid&) = default;
};

/// "In 1 kùš (of height) it ate x kùš": horizontal run x per unit rise.
struct Slope {
  SexRational x;
};

inline std::string_view to_string(RotationSolid::Kind k) {
  switch (k) {
    case RotationSolid::Kind::sphere: return "sphere";
    case RotationSolid::Kind::cylinder: return "cylinder";
    case RotationSolid::Kind::cone: return "cone";
  }
  return "?";
}

inline void validate(const Cuboid& c) {
  detail::require_positive(c.a, "cuboid a");
  detail::require_positive(c.b, "cuboid b");
  detail::require_positive(c.c, "cuboid c");
}

inline void validate(const PrismSpec& p) {
  detail::require_positive(p.base_area, "prism base area");
  detail::require_positive(p.h, "prism height");
}

inline void validate(const PyramidSpec& p) {
  detail::require_positive(p.base_area, "pyramid base area");
  detail::require_positive(p.h, "pyramid height");
}

inline void validate(const SquareFrustum& f) {
  detail::require_positive(f.b, "frustum top side b");
  detail::require_positive(f.h, "frustum height");
  if (f.a == f.b) throw InvalidSolid("frustum with a = b is a prism; use volume_prism");
  if (f.a < f.b) throw InvalidSolid("frustum base side a must exceed top side b");
}

inline void validate(const NgonFrustum& f) {
  if (f.n < 3) throw InvalidSolid("frustum polygon needs n >= 3");
  validate(SquareFrustum{f.a, f.b, f.h});
}

inline void validate(const TruncatedTriangularPrism& t) {
  detail::require_nonnegative(t.x, "ridge x");
  detail::require_nonnegative(t.x1, "end length x1");
  detail::require_nonnegative(t.x2, "end length x2");
  detail::require_positive(t.y, "width y");
  detail::require_positive(t.h, "height h");
  if (t.length().is_zero()) throw InvalidSolid("truncated prism has zero length");
}

inline void validate(const GrainHeap& g) {
  detail::require_nonnegative(g.x, "grain heap top x");
  detail::require_positive(g.h, "grain heap height");
  detail::require_positive(g.slope, "grain heap slope");
}

inline void validate(const RotationSolid& s) {
  detail::require_positive(s.r, "radius");
  if (s.kind != RotationSolid::Kind::sphere) detail::require_positive(s.h, "height");
}

inline SexRational volume_cuboid(const Cuboid& c) {
  validate(c);
  return c.a * c.b * c.c;
}

inline SexRational volume_prism(const PrismSpec& p) {
  validate(p);
  return p.h * p.base_area;
}

inline SexRational volume_pyramid(const PyramidSpec& p) {
  validate(p);
  return p.h * p.base_area / 3;
}

/// (h/3)(a² + ab + b²)
inline SexRational volume_frustum_egyptian(const SquareFrustum& f) {
  validate(f);
  return f.h / 3 * (f.a * f.a + f.a * f.b + f.b * f.b);
}

/// Mean side squared plus a third of the half-difference squared, times h.
/// The two summands are the areas the BM 85194 procedure builds up.
struct BabylonianTerms {
  SexRational mean_square;      // ((a+b)/2)²
  SexRational correction;       // (1/3)((a-b)/2)²
  SexRational area() const { return mean_square + correction; }
};

inline BabylonianTerms babylonian_terms(const SquareFrustum& f) {
  validate(f);
  const SexRational mean = (f.a + f.b) / 2;
  const SexRational half_diff = (f.a - f.b) / 2;
  return {mean * mean, half_diff * half_diff / 3};
}

inline SexRational volume_frustum_babylonian(const SquareFrustum& f) {
  return babylonian_terms(f).area() * f.h;
}

/// Height of the pyramid cut off the top of a frustum: b h / (a - b).
inline SexRational frustum_apex_extension(const SquareFrustum& f) {
  if (f.a == f.b) throw InvalidSolid("a = b is a prism and has no apex");
  validate(f);
  return f.b * f.h / (f.a - f.b);
}

inline SexRational frustum_apex_extension(const NgonFrustum& f) {
  if (f.n < 3) throw InvalidSolid("frustum polygon needs n >= 3");
  return frustum_apex_extension(SquareFrustum{f.a, f.b, f.h});
}

template <class Real = Decimal50>
struct ApproxVolume {
  Real value;
  std::optional<SexRational> exact;  // set when the formula has no transcendental factor
};

/// (n h / 12) cot(π/n) (a² + ab + b²). For n = 4 cot(π/4) = 1 and the
/// result is exact.
template <class Real = Decimal50>
ApproxVolume<Real> volume_frustum_ngon(const NgonFrustum& f) {
  validate(f);
  const SexRational sides = f.a * f.a + f.a * f.b + f.b * f.b;
  if (f.n == 4) {
    SexRational v = f.h * sides / 3;
    return {to_real<Real>(v), std::move(v)};
  }
  using std::tan;
  const Real pi = boost::math::constants::pi<Real>();
  const Real cot = Real(1) / tan(pi / Real(f.n));
  return {Real(f.n) * to_real<Real>(f.h) / Real(12) * cot * to_real<Real>(sides), std::nullopt};
}

/// Middle triangular prism x y h / 2 and end pyramids x_i y h / 3.
struct TruncatedPrismParts {
  SexRational middle, end1, end2;
  SexRational total() const { return middle + end1 + end2; }
};

inline TruncatedPrismParts truncated_prism_parts(const TruncatedTriangularPrism& t) {
  validate(t);
  return {t.x * t.y * t.h / 2, t.x1 * t.y * t.h / 3, t.x2 * t.y * t.h / 3};
}

/// (2 z y h + x y h) / 6 with z = x + x1 + x2.
inline SexRational volume_truncated_prism(const TruncatedTriangularPrism& t) {
  validate(t);
  return (2 * t.length() * t.y * t.h + t.x * t.y * t.h) / 6;
}

struct HeapDims {
  SexRational y;  // width of the base
  SexRational z;  // length of the base
  friend bool operator==(const HeapDims&, const HeapDims&) = default;
};

/// y = 2h/slope, z = x + 2h/slope.
inline HeapDims grain_heap_dims(const GrainHeap& g) {
  validate(g);
  const SexRational y = 2 * g.h / g.slope;
  return {y, g.x + y};
}

inline TruncatedTriangularPrism as_truncated_prism(const GrainHeap& g) {
  const HeapDims d = grain_heap_dims(g);
  const SexRational run = g.h / g.slope;
  return {g.x, run, run, d.y, g.h};
}

class UnsupportedSlope : public std::invalid_argument {
public:
  UnsupportedSlope()
      : std::invalid_argument(
            "volume_grain_heap needs slope 1; use volume_truncated_prism(as_truncated_prism(g))") {}
};

/// x h² + 2(1 - 0;20) h³ for a 45° heap.
inline SexRational volume_grain_heap(const GrainHeap& g) {
  validate(g);
  if (g.slope != 1) throw UnsupportedSlope{};
  const SexRational h2 = g.h * g.h;
  return g.x * h2 + 2 * (SexRational(1) - SexRational(1, 3)) * h2 * g.h;
}

class InfeasibleHeap : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Top length x of a 45° heap of volume V and height h:
/// x = (V - (4/3) h³) / h².
inline SexRational solve_grain_heap_top(const Quantity& volume, const Quantity& height) {
  const SexRational v = convert(volume, Unit::nindan3()).value;
  const SexRational h = convert(height, Unit::nindan()).value;
  detail::require_positive(h, "grain heap height");
  const SexRational wings = SexRational(4, 3) * h * h * h;
  if (v < wings) {
    throw InfeasibleHeap("volume " + format_sex(v) + " nindan³ is below the " +
                         format_sex(wings) + " nindan³ of the two end pyramids");
  }
  return (v - wings) / (h * h);
}

/// Angle of a face that runs x horizontally per unit rise: arctan(1/x).
template <class Real = Decimal50>
Real slope_angle_degrees(const Slope& s) {
  detail::require_positive(s.x, "slope run");
  using std::atan;
  const Real pi = boost::math::constants::pi<Real>();
  return atan(Real(1) / to_real<Real>(s.x)) * Real(180) / pi;
}

template <class Real = Decimal50>
Real volume_rotation(const RotationSolid& s) {
  validate(s);
  const Real pi = boost::math::constants::pi<Real>();
  const Real r = to_real<Real>(s.r);
  const Real h = to_real<Real>(s.h);
  switch (s.kind) {
    case RotationSolid::Kind::sphere: return Real(4) * pi * r * r * r / Real(3);
    case RotationSolid::Kind::cylinder: return pi * r * r * h;
    case RotationSolid::Kind::cone: return pi * r * r * h / Real(3);
  }
  return Real(0);
}

// ---------------------------------------------------------------------------
// Combinatorial polyhedra

struct PolyhedronMesh {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> faces;  // vertex cycles

  std::size_t v() const { return vertices.size(); }
  std::size_t e() const { return edges.size(); }
  std::size_t f() const { return faces.size(); }
};

inline void validate(const PolyhedronMesh& m) {
  if (m.v() == 0 || m.e() == 0 || m.f() == 0) {
    throw InvalidSolid("mesh needs at least one vertex, edge and face");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [p, q] : m.edges) {
    if (p >= m.v() || q >= m.v()) throw InvalidSolid("edge refers to a missing vertex");
    if (p == q) throw InvalidSolid("edge is a loop");
    if (!seen.insert(std::minmax(p, q)).second) throw InvalidSolid("duplicate edge");
  }
  for (const auto& face : m.faces) {
    if (face.size() < 3) throw InvalidSolid("face has fewer than three vertices");
    for (std::size_t i = 0; i < face.size(); ++i) {
      const std::size_t p = face[i];
      const std::size_t q = face[(i + 1) % face.size()];
      if (!seen.count(std::minmax(p, q))) throw InvalidSolid("face edge missing from edge list");
    }
  }
}

inline long long euler_characteristic(const PolyhedronMesh& m) {
  validate(m);
  return static_cast<long long>(m.v()) - static_cast<long long>(m.e()) +
         static_cast<long long>(m.f());
}

inline long long euler_characteristic(long long v, long long e, long long f) {
  return v - e + f;
}

/// Mesh whose edges are exactly the sides of the given faces.
inline PolyhedronMesh mesh_from_faces(std::size_t vertex_count,
                                      std::vector<std::vector<std::size_t>> faces) {
  PolyhedronMesh m;
  for (std::size_t i = 0; i < vertex_count; ++i) m.vertices.push_back("v" + std::to_string(i));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& face : faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      edges.insert(std::minmax(face[i], face[(i + 1) % face.size()]));
    }
  }
  m.edges.assign(edges.begin(), edges.end());
  m.faces = std::move(faces);
  return m;
}

/// Vertices of the dual are the faces of `m`; each vertex of `m` becomes
/// the cycle of faces around it. Needs a closed surface.
inline PolyhedronMesh dual(const PolyhedronMesh& m) {
  // directed edge (p, q) -> face that traverses it in that direction
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
  for (std::size_t fi = 0; fi < m.f(); ++fi) {
    const auto& face = m.faces[fi];
    for (std::size_t i = 0; i < face.size(); ++i) {
      owner[{face[i], face[(i + 1) % face.size()]}] = fi;
    }
  }
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t vi = 0; vi < m.v(); ++vi) {
    auto start = std::find_if(owner.begin(), owner.end(),
                              [vi](const auto& kv) { return kv.first.first == vi; });
    if (start == owner.end()) throw InvalidSolid("isolated vertex has no dual face");
    std::vector<std::size_t> cycle;
    std::size_t next = start->first.second;
    for (;;) {
      const std::size_t fi = owner.at({vi, next});
      if (!cycle.empty() && fi == cycle.front()) break;
      cycle.push_back(fi);
      // the face that enters vi along (next, vi) sits on the other side of that edge
      const auto& face = m.faces[owner.at({next, vi})];
      const auto at = std::find(face.begin(), face.end(), vi);
      next = *(at + 1 == face.end() ? face.begin() : at + 1);
      if (cycle.size() > m.f()) throw InvalidSolid("vertex link is not a cycle");
    }
    cycles.push_back(std::move(cycle));
  }
  return mesh_from_faces(m.f(), std::move(cycles));
}

enum class Platonic { tetrahedron, cube, octahedron, dodecahedron, icosahedron };

inline constexpr std::array<Platonic, 5> kPlatonicSolids{
    Platonic::tetrahedron, Platonic::cube, Platonic::octahedron, Platonic::dodecahedron,
    Platonic::icosahedron};

inline std::string_view to_string(Platonic p) {
  switch (p) {
    case Platonic::tetrahedron: return "tetrahedron";
    case Platonic::cube: return "cube";
    case Platonic::octahedron: return "octahedron";
    case Platonic::dodecahedron: return "dodecahedron";
    case Platonic::icosahedron: return "icosahedron";
  }
  return "?";
}

inline Platonic parse_platonic(std::string_view name) {
  for (const Platonic p : kPlatonicSolids) {
    if (to_string(p) == name) return p;
  }
  if (name == "hexahedron") return Platonic::cube;
  throw std::invalid_argument("unknown Platonic solid '" + std::string(name) + "'");
}

inline PolyhedronMesh platonic(Platonic p) {
  switch (p) {
    case Platonic::tetrahedron:
      return mesh_from_faces(4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
    case Platonic::cube:
      // vertex i has coordinates given by its three bits
      return mesh_from_faces(8, {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                 {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}});
    case Platonic::octahedron:
      // 0/1: ±x, 2/3: ±y, 4/5: ±z
      return mesh_from_faces(6, {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                 {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
    case Platonic::icosahedron: {
      // apex 0, upper ring 1..5, lower ring 6..10, bottom 11
      std::vector<std::vector<std::size_t>> faces;
      for (std::size_t k = 0; k < 5; ++k) {
        const std::size_t u = 1 + k, u_next = 1 + (k + 1) % 5;
        const std::size_t l = 6 + k, l_next = 6 + (k + 1) % 5;
        faces.push_back({0, u, u_next});
        faces.push_back({u, l, u_next});
        faces.push_back({l, l_next, u_next});
        faces.push_back({11, l_next, l});
      }
      return mesh_from_faces(12, std::move(faces));
    }
    case Platonic::dodecahedron:
      return dual(platonic(Platonic::icosahedron));
  }
  throw std::invalid_argument("unknown Platonic solid");
}

// ---------------------------------------------------------------------------
// Cavalieri oracle

/// Composite Simpson integration of a cross-section area profile over
/// [0, h]. Exact up to rounding for profiles of degree <= 3.
template <class Profile>
double slab_volume_oracle(Profile&& area_at_height, double h, std::size_t slabs) {
  if (slabs < 2 || slabs % 2 != 0) {
    throw std::invalid_argument("slab count must be even and at least 2");
  }
  if (!(h > 0)) throw std::invalid_argument("extent must be positive");
  const double step = h / static_cast<double>(slabs);
  double sum = area_at_height(0.0) + area_at_height(h);
  for (std::size_t i = 1; i < slabs; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * area_at_height(step * static_cast<double>(i));
  }
  return sum * step / 3.0;
}

}  // namespace sexa
