#pragma once

// Command-line front end. run() holds all behaviour so it can be driven
// in-process; main() only forwards argv.
//
// Exit status: 0 success, 1 failed check (mismatch, oracle disagreement,
// --strict with annotated errors), 2 usage, parse or evaluation error.

#include "sexa/bundled_scripts.hpp"
#include "sexa/metrology.hpp"
#include "sexa/serialize.hpp"
#include "sexa/sexagesimal.hpp"
#include "sexa/solid.hpp"
#include "sexa/solids.hpp"
#include "sexa/tablet_vm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sexa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

namespace detail {

inline std::string approx_text(const Decimal50& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

inline void print_numeral(std::ostream& out, const SexRational& q, std::size_t places) {
  out << format_sex(q, SexMode::absolute, places) << '\n'
      << "floating: " << format_sex(q, SexMode::floating, places) << '\n'
      << "rational: " << q.to_string() << '\n';
}

inline std::string factorization(BigInt n) {
  std::string out;
  for (const int p : {2, 3, 5}) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e == 0) continue;
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

struct SexaArgs {
  std::string action;
  std::vector<std::string> operands;
  std::size_t places = kDefaultFractionPlaces;
};

inline int cmd_sexa(const SexaArgs& a, bool json, std::ostream& out) {
  std::string joined;
  for (const auto& s : a.operands) joined += (joined.empty() ? "" : " ") + s;

  if (a.action == "eval" || a.action == "recip") {
    SexRational q = evaluate(joined);
    if (a.action == "recip") q = reciprocal(q);
    if (json) {
      Json j = numeral_json(q);
      j["floating"] = format_sex(q, SexMode::floating, a.places);
      j["finite"] = is_finite_sexagesimal(q);
      out << j.dump(2) << '\n';
    } else {
      print_numeral(out, q, a.places);
    }
    return kExitOk;
  }
  if (a.action == "regular") {
    const SexRational q = evaluate(joined);
    if (!q.is_integer() || q.sign() <= 0) {
      throw std::invalid_argument("regular expects a positive integer, got " + format_sex(q));
    }
    const BigInt& n = q.numerator();
    const bool regular = is_regular(n);
    if (json) {
      out << Json{{"n", numeral_json(q)},
                  {"regular", regular},
                  {"irregular_part", irregular_part(n).str()}}
                 .dump(2)
          << '\n';
    } else if (regular) {
      out << "regular (" << factorization(n) << ")\n";
    } else {
      out << "irregular (" << irregular_part(n).str() << ")\n";
    }
    return kExitOk;
  }
  throw std::invalid_argument("unknown sexa action '" + a.action + "' (eval, recip, regular)");
}

struct ConvertArgs {
  std::string quantity;
  std::string target;
  bool breakdown = false;
  std::string storage;
};

inline int cmd_convert(const ConvertArgs& a, bool json, std::ostream& out) {
  Quantity q = parse_quantity(a.quantity);
  if (!a.storage.empty() || (q.unit.dimension() == Dimension::volume && a.breakdown)) {
    const SexRational constant = a.storage.empty() ? kTabletStorageConstant : evaluate(a.storage);
    q = capacity_from_volume(q, constant);
  }
  if (!a.target.empty()) q = convert(q, Unit::parse(a.target));

  std::optional<CapacityBreakdown> parts;
  if (a.breakdown) parts = decompose_capacity(q);

  if (json) {
    Json j = to_json(q);
    if (parts) j["breakdown"] = to_json(*parts);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << format_quantity(q) << '\n';
  if (parts) out << format_breakdown(*parts) << '\n';
  out << "rational: " << q.value.to_string() << ' ' << q.unit.name() << '\n';
  return kExitOk;
}

struct VolumeArgs {
  std::string kind;
  std::map<std::string, std::string> params;
  std::string solid_json;
  std::string file;
  std::string formula = "egyptian";
  std::string unit = "nindan3";
  bool oracle = false;
  std::size_t slabs = 10'000;
  int digits = 15;
};

inline Solid solid_from_args(const VolumeArgs& a) {
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw std::runtime_error("cannot read '" + a.file + "'");
    return solid_from_json(Json::parse(in));
  }
  if (!a.solid_json.empty()) return solid_from_json(Json::parse(a.solid_json));
  if (a.kind.empty()) throw std::invalid_argument("volume needs a solid kind, --solid or --file");

  Json j{{"kind", a.kind == "truncprism" ? "truncated-prism" : a.kind}};
  for (const auto& [k, v] : a.params) {
    if (v.empty()) continue;
    if (k == "n") j["n"] = std::stoi(v);
    else j[k == "S" ? "base_area" : k] = v;
  }
  if (a.kind == "truncprism" || a.kind == "truncated-prism") {
    for (const char* k : {"x1", "x2"}) {
      if (!j.contains(k)) j[k] = "0";
    }
  }
  try {
    return solid_from_json(j);
  } catch (const Json::out_of_range& e) {
    throw std::invalid_argument(std::string("missing parameter for ") + a.kind + ": " + e.what());
  }
}

inline int cmd_volume(const VolumeArgs& a, bool json, std::ostream& out) {
  const Solid solid = solid_from_args(a);
  FrustumFormula formula;
  if (a.formula == "egyptian") formula = FrustumFormula::egyptian;
  else if (a.formula == "babylonian") formula = FrustumFormula::babylonian;
  else throw std::invalid_argument("unknown formula '" + a.formula + "' (egyptian, babylonian)");

  const Unit unit = Unit::parse(a.unit);
  if (unit.dimension() != Dimension::volume) {
    throw DimensionMismatch("volume unit must be nindan3 or sar");
  }
  const SolidVolume v = volume_of(solid, formula);
  const SexRational scale = Unit::nindan3().ratio_to_base() / unit.ratio_to_base();
  std::optional<SexRational> exact;
  if (v.exact) exact = *v.exact * scale;
  const Decimal50 approx = v.approx * to_real<Decimal50>(scale);

  Json j{{"solid", to_json(solid)}, {"unit", std::string(unit.name())}};
  int status = kExitOk;
  if (exact) {
    j["volume"] = numeral_json(*exact);
  }
  if (!json) {
    if (exact) {
      out << format_sex(*exact) << ' ' << unit.symbol() << '\n'
          << "rational: " << exact->to_string() << '\n';
    } else {
      out << approx_text(approx, a.digits) << ' ' << unit.symbol() << " (approximate)\n";
    }
  }
  j["approx"] = approx_text(approx, a.digits);

  if (a.oracle) {
    const SlabProfile profile = cross_sections(solid);
    const double slab = slab_volume_oracle(profile.area, profile.extent, a.slabs) *
                        to_real<double>(scale);
    const double closed = static_cast<double>(approx);
    const double rel = std::abs(slab - closed) / std::abs(closed);
    const bool sphere = std::holds_alternative<RotationSolid>(solid) &&
                        std::get<RotationSolid>(solid).kind == RotationSolid::Kind::sphere;
    const double tolerance = sphere ? 1e-6 : 1e-12;
    const bool agree = rel <= tolerance;
    j["oracle"] = {{"slabs", a.slabs},
                   {"value", slab},
                   {"relative_difference", rel},
                   {"tolerance", tolerance},
                   {"agree", agree}};
    if (!json) {
      std::ostringstream os;
      os << std::setprecision(15) << slab;
      out << "oracle: " << os.str() << " from " << a.slabs << " slabs, relative difference "
          << std::setprecision(3) << rel << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    }
    if (!agree) status = kExitCheckFailed;
  }
  if (json) out << j.dump(2) << '\n';
  return status;
}

struct ReplayArgs {
  std::string script;
  bool strict = false;
  bool print = false;
  bool list = false;
};

inline int list_bundled_scripts(bool json, std::ostream& out) {
  Json rows = Json::array();
  for (const auto& s : vm::list_bundled()) {
    rows.push_back({{"name", std::string(s.name)},
                    {"tablet", std::string(s.tablet)},
                    {"lines", std::string(s.lines)}});
    if (!json) out << std::left << std::setw(13) << s.name << s.tablet << ", " << s.lines << '\n';
  }
  if (json) out << rows.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_replay(const ReplayArgs& a, bool json, std::ostream& out, std::ostream& err) {
  if (a.list) return list_bundled_scripts(json, out);
  if (a.script.empty()) throw std::invalid_argument("replay needs a bundled name or script path");
  std::string text;
  if (const auto* bundled = vm::find_bundled(a.script)) {
    text = std::string(bundled->text);
  } else {
    std::ifstream in(a.script);
    if (!in) throw std::runtime_error("no bundled script or readable file '" + a.script + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (a.print) {
    out << text;
    return kExitOk;
  }
  const vm::Script script = vm::parse_script(text);
  const vm::Trace trace = vm::run(script);
  const vm::Report report = vm::verify(trace);

  if (json) {
    out << vm::to_json(report, trace).dump(2) << '\n';
  } else {
    out << report.text;
  }
  if (report.status == vm::Status::AnnotatedErrorsOnly) {
    err << "warning: " << trace.summary.annotated_error
        << " annotated scribal error(s); the replay follows the corrected values\n";
  }
  return vm::exit_code(report.status, a.strict);
}

inline int cmd_catalog(const std::string& kind, bool json, std::ostream& out) {
  if (kind == "platonic") {
    Json rows = Json::array();
    if (!json) out << std::left << std::setw(14) << "name" << "v   e   f   chi\n";
    for (const Platonic p : kPlatonicSolids) {
      const PolyhedronMesh m = platonic(p);
      const long long chi = euler_characteristic(m);
      rows.push_back({{"name", std::string(to_string(p))},
                      {"v", m.v()}, {"e", m.e()}, {"f", m.f()}, {"euler", chi}});
      if (!json) {
        out << std::left << std::setw(14) << to_string(p) << std::setw(4) << m.v() << std::setw(4)
            << m.e() << std::setw(4) << m.f() << chi << '\n';
      }
    }
    if (json) out << rows.dump(2) << '\n';
    return kExitOk;
  }
  if (kind == "units") {
    Json rows = Json::array();
    for (const auto id : Unit::all()) {
      const Unit u(id);
      const Unit base = u.dimension() == Dimension::length   ? Unit::nindan()
                        : u.dimension() == Dimension::volume ? Unit::nindan3()
                                                             : Unit::sila();
      rows.push_back({{"name", std::string(u.name())},
                      {"symbol", std::string(u.symbol())},
                      {"dimension", std::string(to_string(u.dimension()))},
                      {"ratio", numeral_json(u.ratio_to_base())},
                      {"base", std::string(base.name())}});
      if (!json) {
        out << std::left << std::setw(9) << u.name() << ' ' << std::setw(9)
            << to_string(u.dimension()) << " 1 " << u.symbol() << " = "
            << u.ratio_to_base().to_string() << ' ' << base.symbol() << " ("
            << format_sex(u.ratio_to_base()) << ")\n";
      }
    }
    if (json) out << rows.dump(2) << '\n';
    return kExitOk;
  }
  throw std::invalid_argument("unknown catalog '" + kind + "' (platonic, units)");
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sexagesimal arithmetic, Old Babylonian metrology, solid volumes and tablet replay",
               "sexa"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  detail::SexaArgs sexa_args;
  auto* sexa = app.add_subcommand("sexa", "Evaluate numerals: eval <expr>, recip <n>, regular <n>");
  sexa->add_option("action", sexa_args.action, "eval | recip | regular")->required();
  sexa->add_option("operands", sexa_args.operands, "numerals or expression")->required();
  sexa->add_option("--places", sexa_args.places, "maximum fraction places");
  sexa->add_flag("--json", json, "Emit JSON");

  detail::ConvertArgs convert_args;
  auto* conv = app.add_subcommand("convert", "Convert a quantity between units");
  conv->add_option("quantity", convert_args.quantity, "e.g. \"14,24 sar\"")->required();
  conv->add_option("target", convert_args.target, "target unit");
  conv->add_flag("--breakdown", convert_args.breakdown, "Decompose a capacity into gur7/gur/sila");
  conv->add_option("--storage", convert_args.storage,
                   "sila per volume-sar for volume to capacity (default 8,0,0)");
  conv->add_flag("--json", json, "Emit JSON");

  detail::VolumeArgs volume_args;
  auto* vol = app.add_subcommand("volume", "Volume of a solid");
  vol->set_help_flag("--help", "Print this help message and exit");
  vol->add_option("kind", volume_args.kind,
                  "cuboid | prism | pyramid | frustum | truncprism | grainheap | sphere | cylinder | cone");
  for (const char* p : {"a", "b", "c", "h", "x", "x1", "x2", "y", "S", "r", "n", "slope"}) {
    vol->add_option(std::string("--") + p, volume_args.params[p], std::string("parameter ") + p);
  }
  vol->add_option("--solid", volume_args.solid_json, "solid descriptor as JSON");
  vol->add_option("--file", volume_args.file, "solid descriptor JSON file");
  vol->add_option("--formula", volume_args.formula, "square frustum formula: egyptian | babylonian");
  vol->add_option("--unit", volume_args.unit, "nindan3 | sar");
  vol->add_flag("--oracle", volume_args.oracle, "Cross-check with Simpson slab integration");
  vol->add_option("--slabs", volume_args.slabs, "slab count for --oracle (even)");
  vol->add_option("--digits", volume_args.digits, "significant digits for approximate values");
  vol->add_flag("--json", json, "Emit JSON");

  detail::ReplayArgs replay_args;
  auto* replay = app.add_subcommand("replay", "Replay a tablet procedure script");
  replay->add_option("script", replay_args.script, "bundled name or script path");
  replay->add_flag("--list", replay_args.list, "List the bundled scripts");
  replay->add_flag("--strict", replay_args.strict, "Exit 1 on annotated scribal errors too");
  replay->add_flag("--print", replay_args.print, "Print the script text instead of running it");
  replay->add_flag("--json", json, "Emit JSON");

  std::string catalog_kind;
  auto* catalog = app.add_subcommand("catalog", "Print the platonic or units catalog");
  catalog->add_option("kind", catalog_kind, "platonic | units")->required();
  catalog->add_flag("--json", json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sexa) return detail::cmd_sexa(sexa_args, json, out);
    if (*conv) return detail::cmd_convert(convert_args, json, out);
    if (*vol) return detail::cmd_volume(volume_args, json, out);
    if (*replay) return detail::cmd_replay(replay_args, json, out, err);
    if (*catalog) return detail::cmd_catalog(catalog_kind, json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace sexa::cli
