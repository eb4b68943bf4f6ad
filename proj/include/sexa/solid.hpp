#pragma once

// A closed set of solid descriptors with uniform volume evaluation and
// cross-section profiles for the slab oracle.

#include "sexa/solids.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string_view>
#include <variant>

namespace sexa {

using Solid = std::variant<Cuboid, PrismSpec, PyramidSpec, SquareFrustum, NgonFrustum,
                           TruncatedTriangularPrism, GrainHeap, RotationSolid>;

enum class FrustumFormula { egyptian, babylonian };

inline std::string_view kind_name(const Solid& s) {
  struct Visitor {
    std::string_view operator()(const Cuboid&) const { return "cuboid"; }
    std::string_view operator()(const PrismSpec&) const { return "prism"; }
    std::string_view operator()(const PyramidSpec&) const { return "pyramid"; }
    std::string_view operator()(const SquareFrustum&) const { return "frustum"; }
    std::string_view operator()(const NgonFrustum&) const { return "frustum"; }
    std::string_view operator()(const TruncatedTriangularPrism&) const { return "truncated-prism"; }
    std::string_view operator()(const GrainHeap&) const { return "grainheap"; }
    std::string_view operator()(const RotationSolid& r) const { return to_string(r.kind); }
  };
  return std::visit(Visitor{}, s);
}

/// Volume in nindan³. `exact` is empty when π or an irrational cotangent
/// enters the formula.
struct SolidVolume {
  std::optional<SexRational> exact;
  Decimal50 approx;
};

inline SolidVolume volume_of(const Solid& solid, FrustumFormula formula = FrustumFormula::egyptian) {
  auto exact = [](SexRational v) { return SolidVolume{v, to_real<Decimal50>(v)}; };
  struct Visitor {
    FrustumFormula formula;
    decltype(exact) wrap;
    SolidVolume operator()(const Cuboid& c) const { return wrap(volume_cuboid(c)); }
    SolidVolume operator()(const PrismSpec& p) const { return wrap(volume_prism(p)); }
    SolidVolume operator()(const PyramidSpec& p) const { return wrap(volume_pyramid(p)); }
    SolidVolume operator()(const SquareFrustum& f) const {
      return wrap(formula == FrustumFormula::babylonian ? volume_frustum_babylonian(f)
                                                        : volume_frustum_egyptian(f));
    }
    SolidVolume operator()(const NgonFrustum& f) const {
      auto v = volume_frustum_ngon<Decimal50>(f);
      return {v.exact, v.value};
    }
    SolidVolume operator()(const TruncatedTriangularPrism& t) const {
      return wrap(volume_truncated_prism(t));
    }
    SolidVolume operator()(const GrainHeap& g) const {
      return wrap(g.slope == 1 ? volume_grain_heap(g) : volume_truncated_prism(as_truncated_prism(g)));
    }
    SolidVolume operator()(const RotationSolid& r) const {
      return {std::nullopt, volume_rotation<Decimal50>(r)};
    }
  };
  return std::visit(Visitor{formula, exact}, solid);
}

/// Horizontal cross-section area as a function of height above the base.
struct SlabProfile {
  std::function<double(double)> area;
  double extent = 0;
};

inline SlabProfile cross_sections(const Solid& solid) {
  auto d = [](const SexRational& q) { return to_real<double>(q); };
  // linear shrink from base side a to top side b over height h
  auto tapered = [d](const SexRational& a, const SexRational& b, const SexRational& h, double k) {
    const double base = d(a), top = d(b), height = d(h);
    return SlabProfile{[=](double t) {
                         const double side = base + (top - base) * t / height;
                         return k * side * side;
                       },
                       height};
  };
  struct Visitor {
    decltype(d) real;
    decltype(tapered) taper;
    SlabProfile operator()(const Cuboid& c) const {
      validate(c);
      const double s = real(c.a) * real(c.b);
      return {[s](double) { return s; }, real(c.c)};
    }
    SlabProfile operator()(const PrismSpec& p) const {
      validate(p);
      const double s = real(p.base_area);
      return {[s](double) { return s; }, real(p.h)};
    }
    SlabProfile operator()(const PyramidSpec& p) const {
      validate(p);
      const double s = real(p.base_area), h = real(p.h);
      return {[s, h](double t) { return s * (1 - t / h) * (1 - t / h); }, h};
    }
    SlabProfile operator()(const SquareFrustum& f) const {
      validate(f);
      return taper(f.a, f.b, f.h, 1.0);
    }
    SlabProfile operator()(const NgonFrustum& f) const {
      validate(f);
      const double n = f.n;
      return taper(f.a, f.b, f.h, n / 4.0 / std::tan(std::numbers::pi / n));
    }
    SlabProfile operator()(const TruncatedTriangularPrism& t) const {
      validate(t);
      const double x = real(t.x), ends = real(t.x1) + real(t.x2), y = real(t.y), h = real(t.h);
      return {[=](double z) {
                const double s = 1 - z / h;
                return (x + ends * s) * y * s;
              },
              h};
    }
    SlabProfile operator()(const GrainHeap& g) const { return (*this)(as_truncated_prism(g)); }
    SlabProfile operator()(const RotationSolid& r) const {
      validate(r);
      const double radius = real(r.r), h = real(r.h);
      switch (r.kind) {
        case RotationSolid::Kind::sphere:
          return {[radius](double t) {
                    const double off = t - radius;
                    return std::numbers::pi * (radius * radius - off * off);
                  },
                  2 * radius};
        case RotationSolid::Kind::cylinder:
          return {[radius](double) { return std::numbers::pi * radius * radius; }, h};
        case RotationSolid::Kind::cone:
          return {[radius, h](double t) {
                    const double s = radius * (1 - t / h);
                    return std::numbers::pi * s * s;
                  },
                  h};
      }
      return {};
    }
  };
  return std::visit(Visitor{d, tapered}, solid);
}

}  // namespace sexa
