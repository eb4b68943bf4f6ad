#pragma once

// A line-oriented procedure language for replaying tablet computations.
//
//   # @name SMT14-P1
//   # @source SMT No. 14, obverse lines 1-17
//   # @outputs x:nindan y z
//   h  := LIT 3 nindan                       # Obv. L1
//   t1 := RECIP 12 => 0;5                    # Obv. L3-4
//   w2 := DOUBLE w => 2;20 ! error-for 1;20  # Obv. L9-10
//
// Each step assigns one new register. The optional "=> N" is the value the
// tablet states ("you see N"); "! error-for M" marks a known scribal error
// whose correct value is M. A trailing comment is the step's citation.
// Registers always carry the computed value, so a step after a scribal
// error continues with the correct number the way the tablet does.

#include "sexa/metrology.hpp"
#include "sexa/sexagesimal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sexa::vm {

enum class Opcode { LIT, RECIP, MUL, ADD, SUB, SQUARE, DOUBLE, HALVE, THIRD, CONVERT, STORAGE, DECOMPOSE };

inline constexpr std::array<std::pair<Opcode, std::string_view>, 12> kOpcodeNames{{
    {Opcode::LIT, "LIT"},
    {Opcode::RECIP, "RECIP"},
    {Opcode::MUL, "MUL"},
    {Opcode::ADD, "ADD"},
    {Opcode::SUB, "SUB"},
    {Opcode::SQUARE, "SQUARE"},
    {Opcode::DOUBLE, "DOUBLE"},
    {Opcode::HALVE, "HALVE"},
    {Opcode::THIRD, "THIRD"},
    {Opcode::CONVERT, "CONVERT"},
    {Opcode::STORAGE, "STORAGE"},
    {Opcode::DECOMPOSE, "DECOMPOSE"},
}};

inline std::string_view to_string(Opcode op) {
  for (auto [code, name] : kOpcodeNames) {
    if (code == op) return name;
  }
  return "?";
}

inline std::optional<Opcode> parse_opcode(std::string_view text) {
  for (auto [code, name] : kOpcodeNames) {
    if (name == text) return code;
  }
  return std::nullopt;
}

struct RegisterRef {
  std::string name;
  friend bool operator==(const RegisterRef&, const RegisterRef&) = default;
};

struct Literal {
  SexRational value;
  std::optional<Unit> unit;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct UnitRef {
  Unit unit;
  friend bool operator==(const UnitRef&, const UnitRef&) = default;
};

using Operand = std::variant<RegisterRef, Literal, UnitRef>;

struct Step {
  std::string target;
  Opcode opcode = Opcode::LIT;
  std::vector<Operand> operands;
  std::optional<SexRational> tablet_claim;
  std::optional<SexRational> corrected;
  std::string source_line;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A declared result; `unit` is attached to the number when it is reported.
struct OutputSpec {
  std::string reg;
  std::optional<Unit> unit;
  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct Script {
  std::string name;
  std::string source;
  std::vector<Step> steps;
  std::vector<OutputSpec> outputs;

  friend bool operator==(const Script&, const Script&) = default;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (const char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

inline bool looks_numeric(std::string_view s) {
  if (s.empty()) return false;
  const std::size_t i = s[0] == '-' ? 1 : 0;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class LineParser {
public:
  LineParser(std::size_t line_no, std::vector<Token> tokens)
      : line_(line_no), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw ParseError(message, column, line_);
  }

  std::size_t remaining() const { return tokens_.size() - pos_; }
  bool done() const { return pos_ == tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  std::size_t column() const { return done() ? end_column() : peek().column; }

  std::size_t end_column() const {
    if (tokens_.empty()) return 1;
    return tokens_.back().column + tokens_.back().text.size();
  }

  SexRational numeral(const Token& t) const {
    try {
      return parse_sex(t.text);
    } catch (const ParseError& e) {
      fail(e.message(), t.column + e.column() - 1);
    }
  }

  /// Register or literal. A literal takes a following unit name only while
  /// enough tokens stay behind for the operands still required.
  Operand value(std::size_t required_after) {
    if (done()) fail("missing operand", column());
    const Token t = tokens_[pos_++];
    if (looks_numeric(t.text)) {
      Literal lit{numeral(t), std::nullopt};
      if (remaining() > required_after) {
        if (auto u = Unit::lookup(peek().text)) {
          lit.unit = *u;
          ++pos_;
        }
      }
      return lit;
    }
    if (!is_identifier(t.text)) fail("bad operand '" + std::string(t.text) + "'", t.column);
    if (Unit::lookup(t.text)) {
      fail("unit '" + std::string(t.text) + "' needs a numeral before it", t.column);
    }
    return RegisterRef{std::string(t.text)};
  }

  Operand unit() {
    if (done()) fail("missing unit operand", column());
    const Token t = tokens_[pos_++];
    auto u = Unit::lookup(t.text);
    if (!u) fail("unknown unit '" + std::string(t.text) + "'", t.column);
    return UnitRef{*u};
  }

  Operand plain_literal() {
    if (done()) fail("missing numeral operand", column());
    const Token t = tokens_[pos_++];
    if (!looks_numeric(t.text)) fail("expected a numeral, got '" + std::string(t.text) + "'", t.column);
    return Literal{numeral(t), std::nullopt};
  }

  Token next() { return tokens_[pos_++]; }

private:
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline std::size_t value_arity(Opcode op) {
  switch (op) {
    case Opcode::MUL:
    case Opcode::ADD:
    case Opcode::SUB: return 2;
    default: return 1;
  }
}

}  // namespace detail

inline bool is_reserved_name(std::string_view name) {
  return parse_opcode(name).has_value() || Unit::lookup(name).has_value();
}

/// Parses a script. Errors carry the 1-based line and column.
inline Script parse_script(std::string_view text) {
  Script script;
  std::set<std::string> defined;
  std::size_t line_no = 0;

  while (!text.empty() || line_no == 0) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string_view comment;
    const auto hash = line.find('#');
    std::string_view code = line;
    if (hash != std::string_view::npos) {
      comment = detail::trim(line.substr(hash + 1));
      code = line.substr(0, hash);
    }

    if (detail::trim(code).empty()) {
      if (comment.starts_with("@")) {
        const auto space = comment.find(' ');
        const std::string_view key = comment.substr(0, space);
        const std::string_view arg =
            space == std::string_view::npos ? std::string_view{} : detail::trim(comment.substr(space));
        if (key == "@name") {
          script.name = std::string(arg);
        } else if (key == "@source") {
          script.source = std::string(arg);
        } else if (key == "@outputs") {
          for (const auto& tok : detail::tokenize(arg, 0)) {
            OutputSpec out;
            const auto colon = tok.text.find(':');
            out.reg = std::string(tok.text.substr(0, colon));
            if (colon != std::string_view::npos) {
              auto u = Unit::lookup(tok.text.substr(colon + 1));
              if (!u) throw ParseError("unknown output unit in '" + std::string(tok.text) + "'", hash + 1, line_no);
              out.unit = *u;
            }
            script.outputs.push_back(std::move(out));
          }
        } else {
          throw ParseError("unknown directive '" + std::string(key) + "'", hash + 2, line_no);
        }
      }
      if (nl == std::string_view::npos) break;
      continue;
    }

    // Split off "=> claim [! error-for corrected]".
    std::string_view exec = code;
    std::string_view claim_text;
    std::size_t claim_offset = 0;
    if (const auto arrow = code.find("=>"); arrow != std::string_view::npos) {
      exec = code.substr(0, arrow);
      claim_text = code.substr(arrow + 2);
      claim_offset = arrow + 2;
    }

    detail::LineParser p(line_no, detail::tokenize(exec, 0));
    Step step;
    step.source_line = std::string(comment);

    if (p.done()) p.fail("missing register name", 1);
    const detail::Token target = p.next();
    if (!detail::is_identifier(target.text)) {
      p.fail("bad register name '" + std::string(target.text) + "'", target.column);
    }
    if (is_reserved_name(target.text)) {
      p.fail("'" + std::string(target.text) + "' is reserved and cannot name a register", target.column);
    }
    step.target = std::string(target.text);

    if (p.done() || p.peek().text != ":=") p.fail("expected ':='", p.column());
    p.next();
    if (p.done()) p.fail("missing opcode", p.column());
    const detail::Token op_tok = p.next();
    const auto op = parse_opcode(op_tok.text);
    if (!op) p.fail("unknown opcode '" + std::string(op_tok.text) + "'", op_tok.column);
    step.opcode = *op;

    switch (*op) {
      case Opcode::LIT:
        step.operands.push_back(p.plain_literal());
        if (!p.done()) {
          const detail::Token u = p.next();
          auto unit = Unit::lookup(u.text);
          if (!unit) p.fail("unknown unit '" + std::string(u.text) + "'", u.column);
          std::get<Literal>(step.operands.back()).unit = *unit;
        }
        break;
      case Opcode::CONVERT:
        step.operands.push_back(p.value(1));
        step.operands.push_back(p.unit());
        break;
      case Opcode::STORAGE:
        step.operands.push_back(p.value(1));
        step.operands.push_back(p.plain_literal());
        break;
      case Opcode::DECOMPOSE:
        step.operands.push_back(p.value(p.remaining() >= 2 ? 1 : 0));
        if (!p.done()) {
          Operand u = p.unit();
          if (std::get<UnitRef>(u).unit.dimension() != Dimension::capacity) {
            p.fail("DECOMPOSE component must be gur7, gur or sila", p.end_column());
          }
          step.operands.push_back(u);
        }
        break;
      default: {
        const std::size_t n = detail::value_arity(*op);
        for (std::size_t i = 0; i < n; ++i) step.operands.push_back(p.value(n - i - 1));
      }
    }
    if (!p.done()) {
      p.fail(std::string(to_string(*op)) + " takes " +
                 std::to_string(step.operands.size()) + " operand(s); extra '" +
                 std::string(p.peek().text) + "'",
             p.peek().column);
    }

    for (const auto& operand : step.operands) {
      if (const auto* r = std::get_if<RegisterRef>(&operand)) {
        if (!defined.count(r->name)) {
          throw ParseError("undefined register '" + r->name + "'", 1, line_no);
        }
      }
    }

    if (!claim_text.empty() || claim_offset != 0) {
      auto claim_tokens = detail::tokenize(claim_text, claim_offset);
      detail::LineParser c(line_no, std::move(claim_tokens));
      if (c.done()) c.fail("missing claim after '=>'", claim_offset + 1);
      const detail::Token claim = c.next();
      step.tablet_claim = c.numeral(claim);
      if (!c.done()) {
        const detail::Token bang = c.next();
        if (bang.text != "!") c.fail("expected '! error-for'", bang.column);
        if (c.done() || c.next().text != "error-for") c.fail("expected 'error-for'", c.column());
        if (c.done()) c.fail("missing corrected value", c.column());
        step.corrected = c.numeral(c.next());
        if (!c.done()) c.fail("unexpected text after correction", c.column());
      }
    }

    if (!defined.insert(step.target).second) {
      throw ParseError("register '" + step.target + "' is already defined", target.column, line_no);
    }
    script.steps.push_back(std::move(step));
    if (nl == std::string_view::npos) break;
  }

  for (const auto& out : script.outputs) {
    if (!defined.count(out.reg)) {
      throw ParseError("output '" + out.reg + "' is not a register", 1, 0);
    }
  }
  return script;
}

inline std::string format_operand(const Operand& operand) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RegisterRef>) {
          return o.name;
        } else if constexpr (std::is_same_v<T, Literal>) {
          std::string s = format_sex(o.value);
          if (o.unit) s += " " + std::string(o.unit->name());
          return s;
        } else {
          return std::string(o.unit.name());
        }
      },
      operand);
}

/// Inverse of parse_script for scripts with finite literals.
inline std::string format_script(const Script& s) {
  std::ostringstream out;
  if (!s.name.empty()) out << "# @name " << s.name << '\n';
  if (!s.source.empty()) out << "# @source " << s.source << '\n';
  if (!s.outputs.empty()) {
    out << "# @outputs";
    for (const auto& o : s.outputs) {
      out << ' ' << o.reg;
      if (o.unit) out << ':' << o.unit->name();
    }
    out << '\n';
  }
  for (const auto& step : s.steps) {
    out << step.target << " := " << to_string(step.opcode);
    for (const auto& operand : step.operands) out << ' ' << format_operand(operand);
    if (step.tablet_claim) {
      out << " => " << format_sex(*step.tablet_claim);
      if (step.corrected) out << " ! error-for " << format_sex(*step.corrected);
    }
    if (!step.source_line.empty()) out << "  # " << step.source_line;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Execution

/// Register contents. DECOMPOSE fills `breakdown` and puts the selected
/// component in `number`.
struct Value {
  SexRational number;
  std::optional<Unit> unit;
  std::optional<CapacityBreakdown> breakdown;

  friend bool operator==(const Value&, const Value&) = default;
};

enum class Verdict { OK, AnnotatedError, Mismatch, Unclaimed };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::OK: return "ok";
    case Verdict::AnnotatedError: return "annotated-error";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Unclaimed: return "unclaimed";
  }
  return "?";
}

inline Verdict judge(const SexRational& computed, const std::optional<SexRational>& claim,
                     const std::optional<SexRational>& corrected) {
  if (!claim) return Verdict::Unclaimed;
  if (computed == *claim) return Verdict::OK;
  if (corrected && computed == *corrected) return Verdict::AnnotatedError;
  return Verdict::Mismatch;
}

struct StepResult {
  std::size_t index = 0;
  Value computed;
  Verdict verdict = Verdict::Unclaimed;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct VerdictCounts {
  std::size_t ok = 0;
  std::size_t annotated_error = 0;
  std::size_t mismatch = 0;
  std::size_t unclaimed = 0;

  std::size_t claimed() const { return ok + annotated_error + mismatch; }
  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

struct Trace {
  Script script;
  std::vector<StepResult> results;
  VerdictCounts summary;

  const Value& value_of(std::string_view reg) const {
    for (const auto& r : results) {
      if (script.steps[r.index].target == reg) return r.computed;
    }
    throw std::out_of_range("no register '" + std::string(reg) + "'");
  }

  friend bool operator==(const Trace&, const Trace&) = default;
};

class RuntimeError : public std::runtime_error {
public:
  RuntimeError(std::size_t step_index, const Step& step, const std::string& what)
      : std::runtime_error(describe(step_index, step, what)), step_index_(step_index) {}

  std::size_t step_index() const noexcept { return step_index_; }

private:
  static std::string describe(std::size_t i, const Step& step, const std::string& what) {
    std::string s = "step " + std::to_string(i) + " (" + step.target + " := " +
                    std::string(to_string(step.opcode));
    if (!step.source_line.empty()) s += ", " + step.source_line;
    return s + "): " + what;
  }

  std::size_t step_index_;
};

/// Executes a script against its own register file.
class Interpreter {
public:
  Trace run(const Script& script) {
    registers_.clear();
    Trace trace;
    trace.script = script;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
      const Step& step = script.steps[i];
      Value v;
      try {
        v = execute(step);
      } catch (const RuntimeError&) {
        throw;
      } catch (const std::exception& e) {
        throw RuntimeError(i, step, e.what());
      }
      const Verdict verdict = judge(v.number, step.tablet_claim, step.corrected);
      switch (verdict) {
        case Verdict::OK: ++trace.summary.ok; break;
        case Verdict::AnnotatedError: ++trace.summary.annotated_error; break;
        case Verdict::Mismatch: ++trace.summary.mismatch; break;
        case Verdict::Unclaimed: ++trace.summary.unclaimed; break;
      }
      registers_[step.target] = v;
      trace.results.push_back({i, std::move(v), verdict});
    }
    return trace;
  }

private:
  Value fetch(const Operand& operand) const {
    if (const auto* r = std::get_if<RegisterRef>(&operand)) {
      const auto it = registers_.find(r->name);
      if (it == registers_.end()) throw std::runtime_error("undefined register '" + r->name + "'");
      return it->second;
    }
    if (const auto* lit = std::get_if<Literal>(&operand)) return {lit->value, lit->unit, {}};
    throw std::runtime_error("unit used where a value is expected");
  }

  static std::optional<Unit> common_unit(Value& a, const Value& b) {
    if (!a.unit || !b.unit) return std::nullopt;
    if (a.unit->dimension() != b.unit->dimension()) {
      throw DimensionMismatch("cannot combine " + std::string(a.unit->name()) + " with " +
                              std::string(b.unit->name()));
    }
    return a.unit;
  }

  Value execute(const Step& step) const {
    const auto& ops = step.operands;
    switch (step.opcode) {
      case Opcode::LIT: return fetch(ops[0]);
      case Opcode::RECIP: return {reciprocal(fetch(ops[0]).number), {}, {}};
      case Opcode::MUL: return {fetch(ops[0]).number * fetch(ops[1]).number, {}, {}};
      case Opcode::ADD:
      case Opcode::SUB: {
        Value a = fetch(ops[0]);
        Value b = fetch(ops[1]);
        const auto unit = common_unit(a, b);
        if (unit) b.number = convert({b.number, *b.unit}, *unit).value;
        const SexRational n = step.opcode == Opcode::ADD ? a.number + b.number : a.number - b.number;
        return {n, unit, {}};
      }
      case Opcode::SQUARE: {
        const Value a = fetch(ops[0]);
        return {a.number * a.number, {}, {}};
      }
      case Opcode::DOUBLE: {
        Value a = fetch(ops[0]);
        return {a.number * 2, a.unit, {}};
      }
      case Opcode::HALVE: {
        Value a = fetch(ops[0]);
        return {a.number / 2, a.unit, {}};
      }
      case Opcode::THIRD: {
        Value a = fetch(ops[0]);
        return {a.number / 3, a.unit, {}};
      }
      case Opcode::CONVERT: {
        const Value a = fetch(ops[0]);
        const Unit target = std::get<UnitRef>(ops[1]).unit;
        if (!a.unit) {
          throw DimensionMismatch("CONVERT operand carries no unit");
        }
        return {convert({a.number, *a.unit}, target).value, target, {}};
      }
      case Opcode::STORAGE: {
        const Value a = fetch(ops[0]);
        const Quantity volume{a.number, a.unit.value_or(Unit::sar())};
        const Quantity cap = capacity_from_volume(volume, std::get<Literal>(ops[1]).value);
        return {cap.value, cap.unit, {}};
      }
      case Opcode::DECOMPOSE: {
        const Value a = fetch(ops[0]);
        const Unit component =
            ops.size() > 1 ? std::get<UnitRef>(ops[1]).unit : Unit::gur7();
        const CapacityBreakdown b =
            decompose_capacity({a.number, a.unit.value_or(Unit::sila())});
        SexRational n;
        if (component == Unit::gur7()) n = SexRational(b.gur7);
        else if (component == Unit::gur()) n = SexRational(b.gur);
        else n = b.sila;
        return {n, component, b};
      }
    }
    throw std::logic_error("unhandled opcode");
  }

  std::map<std::string, Value, std::less<>> registers_;
};

inline Trace run(const Script& script) { return Interpreter{}.run(script); }

// ---------------------------------------------------------------------------
// Reporting

enum class Status { AllOk, AnnotatedErrorsOnly, Mismatch };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::AllOk: return "all-ok";
    case Status::AnnotatedErrorsOnly: return "annotated-errors-only";
    case Status::Mismatch: return "mismatch";
  }
  return "?";
}

inline Status status_of(const Trace& t) {
  if (t.summary.mismatch > 0) return Status::Mismatch;
  if (t.summary.annotated_error > 0) return Status::AnnotatedErrorsOnly;
  return Status::AllOk;
}

/// Process exit status for a replay: annotated scribal errors pass unless
/// `strict`; any mismatch fails.
inline int exit_code(Status s, bool strict = false) {
  switch (s) {
    case Status::AllOk: return 0;
    case Status::AnnotatedErrorsOnly: return strict ? 1 : 0;
    case Status::Mismatch: return 1;
  }
  return 1;
}

/// `v` tagged with a declared output unit, converting when it already
/// carries a unit of that dimension.
inline Value as_displayed(const Value& v, std::optional<Unit> display) {
  if (!display || v.breakdown) return v;
  Value out = v;
  if (v.unit && v.unit->dimension() == display->dimension()) {
    out.number = convert({v.number, *v.unit}, *display).value;
  }
  out.unit = display;
  return out;
}

inline std::string format_value(const Value& v, std::optional<Unit> display = std::nullopt) {
  if (v.breakdown) return format_breakdown(*v.breakdown);
  if (display) {
    const Value shown = as_displayed(v, display);
    return format_sex(shown.number) + " " + std::string(display->symbol());
  }
  return format_sex(v.number);
}

struct Report {
  Status status = Status::AllOk;
  std::vector<std::size_t> flagged;  // step indices that are not OK/Unclaimed
  std::string summary_line;
  std::string text;
};

inline Report verify(const Trace& t) {
  Report r;
  r.status = status_of(t);

  std::ostringstream body;
  body << "script " << (t.script.name.empty() ? "(unnamed)" : t.script.name);
  if (!t.script.source.empty()) body << " [" << t.script.source << "]";
  body << '\n';

  // columns: index, instruction, computed, tablet claim, verdict, citation
  std::vector<std::array<std::string, 6>> rows;
  std::vector<std::string> wrote;
  for (const auto& res : t.results) {
    const Step& step = t.script.steps[res.index];
    std::string instr = step.target + " := " + std::string(to_string(step.opcode));
    for (const auto& o : step.operands) instr += ' ' + format_operand(o);
    rows.push_back({std::to_string(res.index), instr, format_value(res.computed),
                    step.tablet_claim ? format_sex(*step.tablet_claim) : "-",
                    std::string(to_string(res.verdict)), step.source_line});
    if (res.verdict == Verdict::AnnotatedError || res.verdict == Verdict::Mismatch) {
      r.flagged.push_back(res.index);
      wrote.push_back(format_sex(*step.tablet_claim) + " for " + format_sex(res.computed.number));
    }
  }
  // display width in code points, so Unicode unit symbols line up
  const auto width = [](const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  };
  std::array<std::size_t, 6> widths{1, 0, 8, 6, 7, 0};
  const std::array<const char*, 6> heads{"#", "step", "computed", "tablet", "verdict", "line"};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 5; ++c) widths[c] = std::max(widths[c], width(row[c]));
  }
  const auto emit = [&](const std::array<std::string, 6>& row) {
    body << "  ";
    for (std::size_t c = 0; c < 6; ++c) {
      body << row[c];
      if (c < 5) body << std::string(widths[c] - width(row[c]) + 2, ' ');
    }
    body << '\n';
  };
  emit({heads[0], heads[1], heads[2], heads[3], heads[4], heads[5]});
  for (const auto& row : rows) emit(row);

  std::string line;
  for (const auto& out : t.script.outputs) {
    if (!line.empty()) line += ", ";
    line += out.reg + " = " + format_value(t.value_of(out.reg), out.unit);
  }
  const auto plural = [](std::size_t n, const char* word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
  };
  std::string tail;
  if (t.summary.annotated_error > 0) tail = plural(t.summary.annotated_error, "annotated scribal error");
  if (t.summary.mismatch > 0) {
    if (!tail.empty()) tail += ", ";
    tail += plural(t.summary.mismatch, "mismatch");
  }
  if (tail.empty()) tail = plural(t.summary.claimed(), "claim") + " confirmed";
  if (!wrote.empty()) {
    tail += " (tablet wrote ";
    for (std::size_t i = 0; i < wrote.size(); ++i) tail += (i ? "; " : "") + wrote[i];
    tail += ")";
  }
  r.summary_line = line.empty() ? tail : line + "; " + tail;

  body << "status: " << to_string(r.status) << '\n' << r.summary_line << '\n';
  r.text = body.str();
  return r;
}

}  // namespace sexa::vm
