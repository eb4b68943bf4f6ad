#include "generators.hpp"
#include "sexa/metrology.hpp"
#include "sexa/solid.hpp"
#include "sexa/solids.hpp"

#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <map>

using namespace sexa;
using sexa::testing::Gen;

namespace {

SexRational q(long long n, long long d = 1) { return {BigInt(n), BigInt(d)}; }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Decimal50 rel(const Decimal50& a, const Decimal50& b) { return abs(a - b) / abs(b); }

SquareFrustum random_frustum(Gen& g) {
  const SexRational b = g.positive(500, 60);
  return {b + g.positive(500, 60), b, g.positive(500, 60)};
}

// Every directed edge is used by exactly one face and its reverse by
// another: a closed, consistently oriented surface.
void expect_oriented_closed(const PolyhedronMesh& m) {
  std::map<std::pair<std::size_t, std::size_t>, int> uses;
  for (const auto& face : m.faces) {
    for (std::size_t i = 0; i < face.size(); ++i) ++uses[{face[i], face[(i + 1) % face.size()]}];
  }
  for (const auto& [edge, n] : uses) {
    EXPECT_EQ(n, 1) << edge.first << "->" << edge.second;
    EXPECT_EQ(uses.count({edge.second, edge.first}), 1u) << edge.first << "->" << edge.second;
  }
  EXPECT_EQ(uses.size(), 2 * m.e());
}

// Area of a regular n-gon of side s from its circumradius.
Decimal50 polygon_area(int n, const Decimal50& s) {
  const Decimal50 pi = boost::math::constants::pi<Decimal50>();
  const Decimal50 r = s / (2 * sin(pi / n));
  return Decimal50(n) / 2 * r * r * sin(2 * pi / n);
}

}  // namespace

TEST(Volumes, Cuboid) {
  EXPECT_EQ(volume_cuboid({q(1), q(1), q(1)}), q(1));
  EXPECT_EQ(volume_cuboid({q(3), q(3), q(3)}), q(27));
  EXPECT_EQ(volume_cuboid({q(2), q(3), q(5)}), q(30));
  EXPECT_THROW(volume_cuboid({q(0), q(1), q(1)}), InvalidSolid);
}

TEST(Volumes, PrismAndPyramid) {
  EXPECT_EQ(volume_prism({q(9), q(4)}), q(36));
  EXPECT_EQ(volume_prism({q(1), q(1)}), q(1));
  EXPECT_EQ(volume_prism({q(1, 2) * 3 * 6, q(4)}), q(36));
  EXPECT_EQ(volume_pyramid({q(9), q(3)}), q(9));
  EXPECT_EQ(volume_pyramid({q(1), q(3)}), q(1));
  EXPECT_EQ(volume_pyramid({q(18), q(3)}), (q(1) - q(1, 3)) * 27);
  EXPECT_THROW(volume_pyramid({q(1), q(0)}), InvalidSolid);
  EXPECT_THROW(volume_prism({q(-1), q(2)}), InvalidSolid);
}

TEST(Volumes, SquareFrustumFormulas) {
  EXPECT_EQ(volume_frustum_egyptian({q(10), q(7), q(3, 2)}), q(219, 2));
  EXPECT_EQ(volume_frustum_egyptian({q(2), q(1), q(3)}), q(7));
  EXPECT_EQ(volume_frustum_egyptian({q(3), q(1), q(3)}), q(13));
  EXPECT_EQ(volume_frustum_babylonian({q(2), q(1), q(3)}), q(7));
  EXPECT_EQ(volume_frustum_babylonian({q(3), q(1), q(3)}), q(13));

  const SquareFrustum pit{q(10), q(7), convert({q(18), Unit::kus()}, Unit::nindan()).value};
  const BabylonianTerms t = babylonian_terms(pit);
  EXPECT_EQ(format_sex(t.mean_square), "1,12;15");
  EXPECT_EQ(format_sex(t.correction), "0;45");
  EXPECT_EQ(t.area(), q(73));
  EXPECT_EQ(q(73) * 18, q(1314));
  EXPECT_EQ(convert({volume_frustum_babylonian(pit), Unit::nindan3()}, Unit::sar()).value, q(1314));
}

TEST(Volumes, DegenerateFrustumIsRejected) {
  EXPECT_THROW(volume_frustum_egyptian({q(2), q(2), q(1)}), InvalidSolid);
  EXPECT_THROW(volume_frustum_babylonian({q(1), q(2), q(1)}), InvalidSolid);
  EXPECT_THROW(frustum_apex_extension(SquareFrustum{q(2), q(2), q(1)}), InvalidSolid);
  EXPECT_THROW(volume_frustum_egyptian({q(2), q(1), q(0)}), InvalidSolid);
  EXPECT_THROW(volume_frustum_ngon(NgonFrustum{2, q(2), q(1), q(1)}), InvalidSolid);
}

TEST(Volumes, ApexExtension) {
  EXPECT_EQ(frustum_apex_extension(SquareFrustum{q(2), q(1), q(3)}), q(3));
  EXPECT_EQ(frustum_apex_extension(SquareFrustum{q(10), q(7), q(3, 2)}), q(7, 2));
  EXPECT_EQ(frustum_apex_extension(NgonFrustum{5, q(5), q(1), q(4)}), q(1));
}

TEST(Volumes, NgonFrustum) {
  const auto square = volume_frustum_ngon(NgonFrustum{4, q(2), q(1), q(3)});
  ASSERT_TRUE(square.exact.has_value());
  EXPECT_EQ(*square.exact, q(7));

  const auto tri = volume_frustum_ngon(NgonFrustum{3, q(2), q(1), q(3)});
  EXPECT_FALSE(tri.exact.has_value());
  EXPECT_LT(rel(tri.value, Decimal50(21) / 4 / sqrt(Decimal50(3))), Decimal50("1e-45"));

  const auto hex = volume_frustum_ngon(NgonFrustum{6, q(2), q(1), q(1)});
  EXPECT_LT(rel(hex.value, Decimal50("3.5") * sqrt(Decimal50(3))), Decimal50("1e-45"));
}

TEST(Volumes, NgonMatchesPyramidDifference) {
  Gen g(0x9e0);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(g.integer(3, 12));
    const SquareFrustum s = random_frustum(g);
    const NgonFrustum f{n, s.a, s.b, s.h};
    const Decimal50 ext = to_real<Decimal50>(frustum_apex_extension(f));
    const Decimal50 h = to_real<Decimal50>(f.h);
    const Decimal50 oracle = (polygon_area(n, to_real<Decimal50>(f.a)) * (h + ext) -
                              polygon_area(n, to_real<Decimal50>(f.b)) * ext) / 3;
    ASSERT_LT(rel(volume_frustum_ngon(f).value, oracle), Decimal50("1e-40")) << "n = " << n;
  }
}

TEST(Volumes, TruncatedPrism) {
  EXPECT_EQ(volume_truncated_prism({q(4), q(3), q(3), q(6), q(3)}), q(72));
  EXPECT_EQ(volume_truncated_prism({q(5), q(0), q(0), q(2), q(3)}), q(15));
  EXPECT_EQ(volume_truncated_prism({q(0), q(1), q(1), q(3), q(3)}), q(6));
  const auto parts = truncated_prism_parts({q(4), q(3), q(3), q(6), q(3)});
  EXPECT_EQ(parts.middle, q(36));
  EXPECT_EQ(parts.end1, q(18));
  EXPECT_EQ(parts.total(), q(72));
  EXPECT_THROW(volume_truncated_prism({q(0), q(0), q(0), q(1), q(1)}), InvalidSolid);
}

TEST(Volumes, TruncatedPrismSpecialCases) {
  Gen g(0x7a);
  for (int i = 0; i < 500; ++i) {
    const SexRational x = g.positive(), y = g.positive(), h = g.positive();
    const SexRational x1 = g.positive(), x2 = g.positive();
    ASSERT_EQ(volume_truncated_prism({x, 0, 0, y, h}), x * y * h / 2);
    ASSERT_EQ(volume_truncated_prism({0, x1, x2, y, h}), x1 * y * h / 3 + x2 * y * h / 3);
    ASSERT_EQ(volume_truncated_prism({x, x1, x2, y, h}), truncated_prism_parts({x, x1, x2, y, h}).total());
  }
}

TEST(GrainHeap, Dimensions) {
  EXPECT_EQ(grain_heap_dims({q(4), q(3)}), (HeapDims{q(6), q(10)}));
  EXPECT_EQ(grain_heap_dims({q(0), q(1)}), (HeapDims{q(2), q(2)}));
  EXPECT_EQ(grain_heap_dims({q(4), q(3), q(2)}), (HeapDims{q(3), q(7)}));
  EXPECT_THROW(grain_heap_dims({q(4), q(3), q(0)}), InvalidSolid);
}

TEST(GrainHeap, Volume) {
  EXPECT_EQ(volume_grain_heap({q(4), q(3)}), q(72));
  EXPECT_EQ(convert({q(72), Unit::nindan3()}, Unit::sar()).value, q(864));
  EXPECT_EQ(volume_grain_heap({q(0), q(3)}), q(36));
  EXPECT_EQ(volume_grain_heap({q(1), q(3)}), q(45));
  EXPECT_THROW(volume_grain_heap({q(1), q(0)}), InvalidSolid);
  EXPECT_THROW(volume_grain_heap({q(1), q(3), q(2)}), UnsupportedSlope);
}

TEST(GrainHeap, SolveTop) {
  EXPECT_EQ(solve_grain_heap_top({q(864), Unit::sar()}, {q(3), Unit::nindan()}), q(4));
  EXPECT_EQ(solve_grain_heap_top({q(36), Unit::nindan3()}, {q(3), Unit::nindan()}), q(0));
  EXPECT_EQ(solve_grain_heap_top({q(45), Unit::nindan3()}, {q(3), Unit::nindan()}), q(1));
  EXPECT_EQ(solve_grain_heap_top({q(864), Unit::sar()}, {q(36), Unit::kus()}), q(4));
  EXPECT_THROW(solve_grain_heap_top({q(35), Unit::nindan3()}, {q(3), Unit::nindan()}), InfeasibleHeap);
  EXPECT_THROW(solve_grain_heap_top({q(35), Unit::nindan()}, {q(3), Unit::nindan()}), DimensionMismatch);
}

TEST(GrainHeap, EquivalentToTruncatedPrism) {
  Gen g(0x6a1);
  for (int i = 0; i < 1000; ++i) {
    const SexRational x = i % 10 ? g.positive() : q(0), h = g.positive();
    ASSERT_EQ(volume_grain_heap({x, h}), volume_truncated_prism({x, h, h, 2 * h, h}));
    ASSERT_EQ(as_truncated_prism({x, h}), (TruncatedTriangularPrism{x, h, h, 2 * h, h}));
  }
}

TEST(GrainHeap, SolveInvertsVolume) {
  Gen g(0x501);
  for (int i = 0; i < 500; ++i) {
    const GrainHeap heap{i % 25 ? g.positive() : q(0), g.positive(100, 60)};
    const Quantity v{volume_grain_heap(heap), Unit::nindan3()};
    ASSERT_EQ(solve_grain_heap_top(v, {heap.h, Unit::nindan()}), heap.x);
  }
}

TEST(Approximate, SlopeAngle) {
  EXPECT_LT(abs(slope_angle_degrees(Slope{q(1)}) - 45), Decimal50("1e-45"));
  const Decimal50 tiny = slope_angle_degrees(Slope{q(1'000'000)});
  EXPECT_LT(abs(tiny - Decimal50("0.0000572957795")), Decimal50("1e-12"));
  EXPECT_THROW(slope_angle_degrees(Slope{q(0)}), InvalidSolid);
  EXPECT_NEAR(slope_angle_degrees<double>(Slope{q(1)}), 45.0, 1e-12);
}

TEST(Approximate, RotationSolids) {
  using K = RotationSolid::Kind;
  const Decimal50 unit_sphere = volume_rotation({K::sphere, q(1)});
  EXPECT_LT(abs(unit_sphere - Decimal50("4.18879020478639098461685784437")), Decimal50("1e-28"));
  const Decimal50 cyl = volume_rotation({K::cylinder, q(1), q(3)});
  const Decimal50 cone = volume_rotation({K::cone, q(1), q(3)});
  EXPECT_LT(rel(cyl / cone, Decimal50(3)), Decimal50("1e-45"));
  EXPECT_LT(rel(volume_rotation({K::sphere, q(2)}), 8 * unit_sphere), Decimal50("1e-45"));
  EXPECT_THROW(volume_rotation({K::cone, q(1), q(0)}), InvalidSolid);
}

TEST(Approximate, ArchimedesOnRadiusGrid) {
  using K = RotationSolid::Kind;
  for (long long num = 1; num <= 40; ++num) {
    for (long long den : {1, 2, 3, 7, 60}) {
      const SexRational r = q(num, den);
      const Decimal50 sphere = volume_rotation({K::sphere, r});
      const Decimal50 cylinder = volume_rotation({K::cylinder, r, 2 * r});
      ASSERT_LT(rel(sphere, 2 * (cylinder - sphere)), Decimal50("1e-12"));
    }
  }
}

TEST(Meshes, PlatonicCounts) {
  const std::map<Platonic, std::array<std::size_t, 3>> expected{
      {Platonic::tetrahedron, {4, 6, 4}},   {Platonic::cube, {8, 12, 6}},
      {Platonic::octahedron, {6, 12, 8}},   {Platonic::dodecahedron, {20, 30, 12}},
      {Platonic::icosahedron, {12, 30, 20}},
  };
  for (const Platonic p : kPlatonicSolids) {
    const PolyhedronMesh m = platonic(p);
    const auto [v, e, f] = expected.at(p);
    EXPECT_EQ(m.v(), v) << to_string(p);
    EXPECT_EQ(m.e(), e) << to_string(p);
    EXPECT_EQ(m.f(), f) << to_string(p);
    EXPECT_EQ(euler_characteristic(m), 2) << to_string(p);
    expect_oriented_closed(m);
  }
}

TEST(Meshes, RegularFacesAndVertexDegrees) {
  const std::map<Platonic, std::pair<std::size_t, std::size_t>> shape{
      {Platonic::tetrahedron, {3, 3}}, {Platonic::cube, {4, 3}},    {Platonic::octahedron, {3, 4}},
      {Platonic::dodecahedron, {5, 3}}, {Platonic::icosahedron, {3, 5}},
  };
  for (const Platonic p : kPlatonicSolids) {
    const PolyhedronMesh m = platonic(p);
    std::vector<std::size_t> degree(m.v(), 0);
    for (auto [a, b] : m.edges) {
      ++degree[a];
      ++degree[b];
    }
    for (const auto& face : m.faces) EXPECT_EQ(face.size(), shape.at(p).first) << to_string(p);
    for (const auto d : degree) EXPECT_EQ(d, shape.at(p).second) << to_string(p);
  }
}

TEST(Meshes, DualSwapsVerticesAndFaces) {
  const PolyhedronMesh cube = platonic(Platonic::cube);
  const PolyhedronMesh octa = dual(cube);
  EXPECT_EQ(octa.v(), 6u);
  EXPECT_EQ(octa.e(), 12u);
  EXPECT_EQ(octa.f(), 8u);
  expect_oriented_closed(octa);
  const PolyhedronMesh tetra = dual(platonic(Platonic::tetrahedron));
  EXPECT_EQ(euler_characteristic(tetra), 2);
}

TEST(Meshes, FigureOneCountTriple) {
  EXPECT_EQ(euler_characteristic(12, 20, 10), 2);

  // hexagonal prism with two side faces split along a diagonal
  std::vector<std::vector<std::size_t>> faces{{0, 1, 2, 3, 4, 5}, {11, 10, 9, 8, 7, 6}};
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t j = (i + 1) % 6;
    const std::vector<std::size_t> quad{j, i, 6 + i, 6 + j};
    if (i < 2) {
      faces.push_back({quad[0], quad[1], quad[2]});
      faces.push_back({quad[0], quad[2], quad[3]});
    } else {
      faces.push_back(quad);
    }
  }
  const PolyhedronMesh m = mesh_from_faces(12, faces);
  EXPECT_EQ(m.v(), 12u);
  EXPECT_EQ(m.e(), 20u);
  EXPECT_EQ(m.f(), 10u);
  EXPECT_EQ(euler_characteristic(m), 2);
  expect_oriented_closed(m);
}

TEST(Meshes, ValidationAndNames) {
  PolyhedronMesh bad = platonic(Platonic::tetrahedron);
  bad.edges.push_back(bad.edges.front());
  EXPECT_THROW(euler_characteristic(bad), InvalidSolid);
  PolyhedronMesh missing = platonic(Platonic::cube);
  missing.edges.pop_back();
  EXPECT_THROW(validate(missing), InvalidSolid);
  EXPECT_THROW(validate(PolyhedronMesh{}), InvalidSolid);

  EXPECT_EQ(parse_platonic("hexahedron"), Platonic::cube);
  EXPECT_EQ(parse_platonic("icosahedron"), Platonic::icosahedron);
  EXPECT_THROW(parse_platonic("sphere"), std::invalid_argument);
}

TEST(SlabOracle, Examples) {
  const auto frustum = cross_sections(SquareFrustum{q(2), q(1), q(3)});
  EXPECT_LT(rel(slab_volume_oracle(frustum.area, frustum.extent, 100), 7.0), 1e-12);
  EXPECT_LT(rel(slab_volume_oracle([](double) { return 9.0; }, 4.0, 2), 36.0), 1e-12);
  const auto sphere = cross_sections(RotationSolid{RotationSolid::Kind::sphere, q(1)});
  EXPECT_LT(rel(slab_volume_oracle(sphere.area, sphere.extent, 10'000), 4 * M_PI / 3), 1e-6);
  EXPECT_THROW(slab_volume_oracle(frustum.area, 3.0, 7), std::invalid_argument);
  EXPECT_THROW(slab_volume_oracle(frustum.area, 3.0, 0), std::invalid_argument);
}

TEST(SlabOracle, AgreesWithClosedFormsOnRandomSolids) {
  Gen g(0xca7);
  using K = RotationSolid::Kind;
  for (int i = 0; i < 300; ++i) {
    const SquareFrustum f = random_frustum(g);
    const SexRational x = g.positive(200, 12), h = g.positive(200, 12), y = g.positive(200, 12);
    const std::vector<Solid> polynomial{
        Cuboid{g.positive(), g.positive(), g.positive()},
        PrismSpec{g.positive(), h},
        PyramidSpec{g.positive(), h},
        f,
        NgonFrustum{static_cast<int>(g.integer(3, 9)), f.a, f.b, f.h},
        TruncatedTriangularPrism{x, g.positive(200, 12), g.positive(200, 12), y, h},
        GrainHeap{x, h},
        GrainHeap{x, h, g.positive(20, 6)},
        RotationSolid{K::cylinder, g.positive(200, 12), h},
        RotationSolid{K::cone, g.positive(200, 12), h},
    };
    for (const Solid& s : polynomial) {
      const auto profile = cross_sections(s);
      const double closed = static_cast<double>(volume_of(s).approx);
      ASSERT_LT(rel(slab_volume_oracle(profile.area, profile.extent, 10'000), closed), 1e-12) << kind_name(s);
    }
    const Solid sphere = RotationSolid{K::sphere, g.positive(200, 12)};
    const auto profile = cross_sections(sphere);
    ASSERT_LT(rel(slab_volume_oracle(profile.area, profile.extent, 10'000),
                  static_cast<double>(volume_of(sphere).approx)),
              1e-6);
  }
}

TEST(SolidVariant, VolumeOfDispatches) {
  EXPECT_EQ(*volume_of(Cuboid{q(1), q(1), q(1)}).exact, q(1));
  EXPECT_EQ(*volume_of(GrainHeap{q(4), q(3)}).exact, q(72));
  EXPECT_EQ(*volume_of(GrainHeap{q(4), q(3), q(2)}).exact,
            volume_truncated_prism(as_truncated_prism({q(4), q(3), q(2)})));
  EXPECT_EQ(*volume_of(SquareFrustum{q(3), q(1), q(3)}, FrustumFormula::babylonian).exact, q(13));
  EXPECT_FALSE(volume_of(RotationSolid{RotationSolid::Kind::sphere, q(1)}).exact.has_value());
  EXPECT_EQ(kind_name(RotationSolid{RotationSolid::Kind::cone, q(1)}), "cone");
}

TEST(Properties, FrustumFormulasAgree) {
  Gen g(0xf5);
  for (int i = 0; i < 1000; ++i) {
    const SquareFrustum f = random_frustum(g);
    ASSERT_EQ(volume_frustum_babylonian(f), volume_frustum_egyptian(f));
    const auto n4 = volume_frustum_ngon(NgonFrustum{4, f.a, f.b, f.h});
    ASSERT_TRUE(n4.exact.has_value());
    ASSERT_EQ(*n4.exact, volume_frustum_egyptian(f));
  }
}

TEST(Properties, PyramidIsAThirdOfThePrism) {
  Gen g(0x3);
  for (int i = 0; i < 500; ++i) {
    const SexRational s = g.positive(), h = g.positive();
    ASSERT_EQ(volume_pyramid({s, h}), volume_prism({s, h}) / 3);
  }
}
