#pragma once

// Old Babylonian units of length, volume and capacity.
//
// Base units: nindan (length), nindan³ (volume), sìla (capacity).
//   1 nindan = 2 gi = 12 kùš
//   1 volume-sar = 1 nindan² × 1 kùš = 0;5 nindan³
//   1 gur = 5,0 sìla, 1 gur₇ = 5,0,0,0 sìla
// Metric equivalents (1 nindan ≈ 6 m, 1 kùš ≈ 50 cm) are approximate and
// are deliberately not part of the catalog.

#include "sexa/sexagesimal.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sexa {

enum class Dimension { length, volume, capacity };

inline std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::length: return "length";
    case Dimension::volume: return "volume";
    case Dimension::capacity: return "capacity";
  }
  return "?";
}

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct UnitEntry {
  std::string_view name;
  std::string_view symbol;
  Dimension dimension;
  long long ratio_num;
  long long ratio_den;
};

// indexed by Unit::Id
inline constexpr std::array<UnitEntry, 8> kUnitTable{{
    {"nindan", "nindan", Dimension::length, 1, 1},
    {"gi", "gi", Dimension::length, 1, 2},
    {"kus", "kùš", Dimension::length, 1, 12},
    {"nindan3", "nindan³", Dimension::volume, 1, 1},
    {"sar", "volume-sar", Dimension::volume, 1, 12},
    {"sila", "sìla", Dimension::capacity, 1, 1},
    {"gur", "gur", Dimension::capacity, 300, 1},
    {"gur7", "gur₇", Dimension::capacity, 1'080'000, 1},
}};

}  // namespace detail

class Unit {
public:
  enum class Id { nindan, gi, kus, nindan3, sar, sila, gur, gur7 };

  constexpr Unit(Id id) : id_(id) {}  // NOLINT(implicit)

  static constexpr Unit nindan() { return Id::nindan; }
  static constexpr Unit gi() { return Id::gi; }
  static constexpr Unit kus() { return Id::kus; }
  static constexpr Unit nindan3() { return Id::nindan3; }
  static constexpr Unit sar() { return Id::sar; }
  static constexpr Unit sila() { return Id::sila; }
  static constexpr Unit gur() { return Id::gur; }
  static constexpr Unit gur7() { return Id::gur7; }

  static constexpr std::array<Id, 8> all() {
    return {Id::nindan, Id::gi, Id::kus, Id::nindan3, Id::sar, Id::sila, Id::gur, Id::gur7};
  }

  constexpr Id id() const { return id_; }

  /// ASCII name accepted on input.
  constexpr std::string_view name() const { return entry().name; }
  /// Transliterated name used on output.
  constexpr std::string_view symbol() const { return entry().symbol; }
  constexpr Dimension dimension() const { return entry().dimension; }

  /// Size of one of this unit in the base unit of its dimension.
  SexRational ratio_to_base() const {
    return SexRational(BigInt(entry().ratio_num), BigInt(entry().ratio_den));
  }

  /// Accepts the ASCII names and the transliterated symbols.
  static std::optional<Unit> lookup(std::string_view text) {
    for (const Id id : all()) {
      const Unit u(id);
      if (text == u.name() || text == u.symbol()) return u;
    }
    return std::nullopt;
  }

  static Unit parse(std::string_view text) {
    if (auto u = lookup(text)) return *u;
    throw std::invalid_argument("unknown unit '" + std::string(text) + "'");
  }

  friend constexpr bool operator==(Unit, Unit) = default;

private:
  constexpr const detail::UnitEntry& entry() const {
    return detail::kUnitTable[static_cast<std::size_t>(id_)];
  }

  Id id_;
};

struct Quantity {
  SexRational value;
  Unit unit = Unit::nindan();

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

/// "14,24 sar", "3 nindan", "0;30 kus". A bare numeral takes `fallback`.
inline Quantity parse_quantity(std::string_view text, std::optional<Unit> fallback = std::nullopt) {
  const auto begin = text.find_first_not_of(' ');
  if (begin == std::string_view::npos) throw ParseError("empty quantity", 1);
  text.remove_prefix(begin);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    if (!fallback) throw ParseError("missing unit in '" + std::string(text) + "'", text.size() + 1);
    return {parse_sex(text), *fallback};
  }
  std::string_view unit_text = text.substr(space);
  unit_text.remove_prefix(unit_text.find_first_not_of(' '));
  const auto unit = Unit::lookup(unit_text);
  if (!unit) {
    throw ParseError("unknown unit '" + std::string(unit_text) + "'", begin + space + 2);
  }
  return {parse_sex(text.substr(0, space)), *unit};
}

inline Quantity convert(const Quantity& q, Unit target) {
  if (q.unit.dimension() != target.dimension()) {
    throw DimensionMismatch("cannot convert " + std::string(to_string(q.unit.dimension())) +
                            " (" + std::string(q.unit.name()) + ") to " +
                            std::string(to_string(target.dimension())) + " (" +
                            std::string(target.name()) + ")");
  }
  return {q.value * q.unit.ratio_to_base() / target.ratio_to_base(), target};
}

/// Storage constant used on SMT No. 14: 8,0,0 sìla per volume-sar.
inline const SexRational kTabletStorageConstant{28'800};
/// Usual Old Babylonian storage constant: 5,0,0 sìla per volume-sar.
inline const SexRational kCanonicalStorageConstant{18'000};

/// Grain capacity in sìla of a volume, at `storage_constant` sìla per volume-sar.
inline Quantity capacity_from_volume(const Quantity& volume,
                                     const SexRational& storage_constant = kTabletStorageConstant) {
  if (storage_constant.sign() <= 0) {
    throw std::invalid_argument("storage constant must be positive");
  }
  const Quantity in_sar = convert(volume, Unit::sar());
  return {in_sar.value * storage_constant, Unit::sila()};
}

/// Capacity written largest unit first. gur < 3600 and sila < 300.
struct CapacityBreakdown {
  BigInt gur7 = 0;
  BigInt gur = 0;
  SexRational sila;

  Quantity recompose() const {
    return {SexRational(gur7 * 1'080'000 + gur * 300) + sila, Unit::sila()};
  }

  friend bool operator==(const CapacityBreakdown&, const CapacityBreakdown&) = default;
};

inline CapacityBreakdown decompose_capacity(const Quantity& q) {
  const Quantity s = convert(q, Unit::sila());
  if (s.value.sign() < 0) throw std::invalid_argument("negative capacity");

  CapacityBreakdown out;
  out.gur7 = s.value.floor() / 1'080'000;
  SexRational rest = s.value - SexRational(out.gur7 * 1'080'000);
  out.gur = rest.floor() / 300;
  out.sila = rest - SexRational(out.gur * 300);
  return out;
}

/// "23 gur₇ 2,24 gur"; the sìla part is omitted when zero unless everything is.
inline std::string format_breakdown(const CapacityBreakdown& b) {
  std::string out;
  auto part = [&out](const SexRational& v, Unit u) {
    if (!out.empty()) out += ' ';
    out += format_sex(v) + " " + std::string(u.symbol());
  };
  if (!b.gur7.is_zero()) part(SexRational(b.gur7), Unit::gur7());
  if (!b.gur.is_zero()) part(SexRational(b.gur), Unit::gur());
  if (!b.sila.is_zero() || out.empty()) part(b.sila, Unit::sila());
  return out;
}

inline std::string format_quantity(const Quantity& q) {
  return format_sex(q.value) + " " + std::string(q.unit.symbol());
}

/// The scribal idiom that names a length in nindan and restates it in a
/// subunit, e.g. "3 (nindan, that is, 6) gi".
inline std::string format_clumsy(const Quantity& q, Unit subunit) {
  if (subunit != Unit::gi() && subunit != Unit::kus()) {
    throw std::invalid_argument("format_clumsy: subunit must be gi or kus, got '" +
                                std::string(subunit.name()) + "'");
  }
  const Quantity in_nindan = convert(q, Unit::nindan());
  const Quantity in_sub = convert(in_nindan, subunit);
  return format_sex(in_nindan.value) + " (nindan, that is, " + format_sex(in_sub.value) + ") " +
         std::string(subunit.symbol());
}

}  // namespace sexa
