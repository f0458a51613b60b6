#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "longknot/fuzz.hpp"
#include "longknot/invariants.hpp"
#include "longknot/switch.hpp"

namespace {

using namespace longknot;
using nlohmann::ordered_json;

enum Exit { ok = 0, usage = 1, invalid = 2, violation = 3 };

struct DiagramSource {
  std::string knot;
  std::string code;
  std::string code_file;

  void add(CLI::App* app) {
    auto* k = app->add_option("--knot", knot, "built-in diagram name");
    auto* c = app->add_option("--code", code, "long knot code, e.g. \"U1- O2+ O1- U2+\"");
    auto* f = app->add_option("--code-file", code_file, "file holding a long knot code");
    k->excludes(c)->excludes(f);
    c->excludes(f);
  }

  LongDiagram load() const {
    if (!knot.empty()) return builtin_diagram(knot);
    if (!code_file.empty()) {
      std::ifstream in(code_file);
      if (!in) throw PreconditionError("cannot open '" + code_file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return LongDiagram::parse(ss.str());
    }
    return LongDiagram::parse(code);
  }

  bool given() const { return !knot.empty() || !code.empty() || !code_file.empty(); }
};

struct SwitchSource {
  std::string name;
  std::string file;
  bool skip_validation = false;

  void add(CLI::App* app) {
    auto* n = app->add_option("--switch", name, "built-in switch name");
    auto* f = app->add_option("--switch-file", file, "switch document (JSON)");
    n->excludes(f);
    app->add_flag("--skip-validation", skip_validation, "do not check the switch axioms (negative controls)");
  }

  AnySwitch load() const {
    if (!name.empty()) return builtin_switch(name);
    return load_switch(file, !skip_validation);
  }

  bool given() const { return !name.empty() || !file.empty(); }
};

template <Coefficient K>
std::string_view coefficient_name();
template <>
std::string_view coefficient_name<Rational>() {
  return "rational";
}
template <>
std::string_view coefficient_name<GaussianRational>() {
  return "gaussian";
}
template <>
std::string_view coefficient_name<GF2>() {
  return "gf2";
}

template <Coefficient K>
ordered_json switch_json(const Switch<K>& s) {
  return {{"name", s.name()},
          {"kind", to_string(s.kind())},
          {"coefficients", coefficient_name<K>()},
          {"variables", s.vars().names()},
          {"dimension", s.dim()}};
}

ordered_json diagram_json(const LongDiagram& d) {
  return {{"code", d.code()}, {"kind", to_string(d.kind())}, {"crossings", d.crossing_count()}};
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

struct ComputeCmd {
  DiagramSource diagram;
  SwitchSource sw;
  std::size_t codim = 1;
  std::string unit_mode;
  std::string format = "text";
};

int run_compute(const ComputeCmd& c) {
  const LongDiagram d = c.diagram.load();
  const AnySwitch any = c.sw.load();
  const std::optional<UnitMode> mode =
      c.unit_mode.empty() ? std::nullopt : std::optional(parse_unit_mode(c.unit_mode));
  return std::visit(
      [&](const auto& s) {
        const auto prof = invariant_profile(d, s, c.codim, mode);
        if (c.format == "json") {
          ordered_json values = ordered_json::array();
          for (const auto& [key, v] : prof.values) {
            values.push_back({{"variant", to_string(key.first)}, {"codim", key.second}, {"value", v.to_string()}});
          }
          emit({{"command", "compute"},
                {"diagram", diagram_json(d)},
                {"switch", switch_json(s)},
                {"unit_mode", to_string(prof.mode)},
                {"r_max", prof.r_max},
                {"values", values}});
        } else {
          std::cout << "diagram   " << d.code() << '\n'
                    << "switch    " << s.name() << '\n'
                    << "unit-mode " << to_string(prof.mode) << '\n';
          for (const auto& [key, v] : prof.values) {
            std::cout << to_string(key.first) << "^(" << key.second << ")\t" << v.to_string() << '\n';
          }
        }
        return Exit::ok;
      },
      any);
}

int print_code(const LongDiagram& d, const std::string& format, std::string_view command) {
  if (format == "json") {
    emit({{"command", command}, {"diagram", diagram_json(d)}});
  } else {
    std::cout << d.code() << '\n';
  }
  return Exit::ok;
}

LongDiagram resolve_operand(const std::string& text) {
  const auto names = builtin_diagram_names();
  if (std::find(names.begin(), names.end(), text) != names.end()) return builtin_diagram(text);
  return LongDiagram::parse(text);
}

int run_check_switch(const SwitchSource& src, const std::string& format) {
  // validation is reported, not enforced, so invalid switches can be inspected
  SwitchSource lenient = src;
  lenient.skip_validation = true;
  const AnySwitch any = lenient.load();
  return std::visit(
      [&](const auto& s) {
        const auto checks = switch_checks(s);
        bool valid = true;
        for (const auto& c : checks) valid = valid && (c.passed || !c.required);
        const bool square = checks.front().passed;
        const SymmetryReport sym = square ? classify_symmetry(s) : SymmetryReport{};
        if (format == "json") {
          ordered_json arr = ordered_json::array();
          for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"required", c.required}});
          emit({{"command", "check-switch"},
                {"switch", switch_json(s)},
                {"valid", valid},
                {"checks", arr},
                {"symmetries", sym.names()},
                {"dagger_unitary_displayed", sym.dagger_unitary_displayed},
                {"self_dagger_displayed", sym.self_dagger_displayed}});
        } else {
          std::cout << "switch " << s.name() << " (" << coefficient_name<typename std::decay_t<decltype(s)>::Mat::Coeff>()
                    << ", " << to_string(s.kind()) << ")\n";
          for (const auto& c : checks) {
            std::cout << (c.passed ? "  pass  " : c.required ? "  FAIL  " : "  no    ") << c.name << (c.required ? "" : " (informational)") << '\n';
          }
          std::cout << "symmetries:";
          for (const auto& n : sym.names()) std::cout << ' ' << n;
          std::cout << (sym.names().empty() ? " none" : "") << '\n';
          std::cout << "with C in both off-diagonal slots of the dagger: self-dagger "
                    << (sym.self_dagger_displayed ? "yes" : "no") << ", dagger-unitary "
                    << (sym.dagger_unitary_displayed ? "yes" : "no") << '\n';
          std::cout << (valid ? "valid" : "invalid") << '\n';
        }
        return valid ? Exit::ok : Exit::invalid;
      },
      any);
}

struct FuzzCmd {
  DiagramSource diagram;
  SwitchSource sw;
  std::size_t codim = 0;
  std::size_t sequences = 100;
  std::size_t depth = 6;
  std::uint64_t seed = 1;
  std::size_t work_limit = 0;
  bool divisibility = false;
  std::string unit_mode;
  std::string format = "text";
};

int run_fuzz(const FuzzCmd& c) {
  const LongDiagram d = c.diagram.load();
  const AnySwitch any = c.sw.load();
  FuzzConfig cfg;
  cfg.sequences = c.sequences;
  cfg.max_moves = c.depth;
  cfg.r_max = c.codim;
  cfg.seed = c.seed;
  cfg.work_limit = c.work_limit;
  cfg.check_divisibility = c.divisibility && d.kind() == KnotKind::virtual_knot;
  if (!c.unit_mode.empty()) cfg.mode = parse_unit_mode(c.unit_mode);
  return std::visit(
      [&](const auto& s) {
        const FuzzReport rep = fuzz_invariance(d, s, cfg);
        if (c.format == "json") {
          ordered_json fails = ordered_json::array();
          for (const auto& f : rep.failures) {
            ordered_json trace = ordered_json::array();
            for (const auto& m : f.trace) trace.push_back(m.to_string());
            fails.push_back({{"sequence", f.sequence},
                             {"sequence_seed", f.sequence_seed},
                             {"trace", trace},
                             {"code", f.code},
                             {"detail", f.detail}});
          }
          emit({{"command", "fuzz"},
                {"diagram", diagram_json(d)},
                {"switch", switch_json(s)},
                {"seed", c.seed},
                {"sequences", rep.sequences},
                {"depth", c.depth},
                {"checked_up_to", rep.checked_up_to},
                {"profile_mismatches", rep.profile_mismatches},
                {"divisibility_failures", rep.divisibility_failures},
                {"failures", fails}});
        } else {
          std::cout << "fuzz " << d.code() << " with " << s.name() << ": " << rep.sequences << " sequences, seed "
                    << c.seed << '\n';
          for (std::size_t r = 0; r < rep.checked_up_to.size(); ++r) {
            std::cout << "  compared through codim " << r << ": " << rep.checked_up_to[r] << '\n';
          }
          std::cout << "  profile mismatches: " << rep.profile_mismatches << '\n'
                    << "  divisibility failures: " << rep.divisibility_failures << '\n';
          for (const auto& f : rep.failures) {
            std::cout << "  sequence " << f.sequence << " (seed " << f.sequence_seed << "):";
            for (const auto& m : f.trace) std::cout << ' ' << m.to_string();
            std::cout << "\n    " << f.code << "\n    " << f.detail << '\n';
          }
        }
        return rep.ok() ? Exit::ok : Exit::violation;
      },
      any);
}

int run_list(const std::string& format) {
  if (format == "json") {
    emit({{"command", "list"}, {"diagrams", builtin_diagram_names()}, {"switches", builtin_switch_names()}});
    return Exit::ok;
  }
  std::cout << "diagrams:\n";
  for (const auto& n : builtin_diagram_names()) std::cout << "  " << n << "\t" << builtin_diagram(n).code() << '\n';
  std::cout << "switches:\n";
  for (const auto& n : builtin_switch_names()) std::cout << "  " << n << '\n';
  return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of long virtual and long flat knots from switches"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  ComputeCmd compute;
  auto* cmp = app.add_subcommand("compute", "invariant profile of a diagram under a switch");
  compute.diagram.add(cmp);
  compute.sw.add(cmp);
  cmp->add_option("--codim", compute.codim, "largest codimension")->capture_default_str();
  cmp->add_option("--unit-mode", compute.unit_mode, "field | content");

  DiagramSource tr_src;
  std::string tr_kind;
  auto* tr = app.add_subcommand("transform", "mirror, reflect or reverse a diagram");
  tr->add_option("kind", tr_kind, "mirror | reflect | reverse")->required();
  tr_src.add(tr);

  std::vector<std::string> cat_operands;
  auto* cat = app.add_subcommand("concat", "concatenate long knots (built-in names or codes)");
  cat->add_option("operands", cat_operands, "two or more diagrams")->required()->expected(2, -1);

  DiagramSource desc_src;
  auto* desc = app.add_subcommand("descent", "lift a long flat knot to a long virtual knot");
  desc_src.add(desc);

  SwitchSource chk_src;
  auto* chk = app.add_subcommand("check-switch", "check the switch axioms and symmetries");
  chk_src.add(chk);

  FuzzCmd fz;
  auto* fuzz = app.add_subcommand("fuzz", "compare profiles across random move sequences");
  fz.diagram.add(fuzz);
  fz.sw.add(fuzz);
  fuzz->add_option("--codim", fz.codim, "largest codimension compared")->capture_default_str();
  fuzz->add_option("--moves", fz.sequences, "number of move sequences")->capture_default_str();
  fuzz->add_option("--depth", fz.depth, "maximum moves per sequence")->capture_default_str();
  fuzz->add_option("--seed", fz.seed, "master seed")->capture_default_str();
  fuzz->add_option("--work-limit", fz.work_limit, "per-diagram work cap above codim 0 (0: none)")
      ->capture_default_str();
  fuzz->add_flag("--divisibility", fz.divisibility, "also check p | op and p | np");
  fuzz->add_option("--unit-mode", fz.unit_mode, "field | content");

  auto* lst = app.add_subcommand("list", "built-in diagrams and switches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Exit::ok : Exit::usage;
  }

  auto need = [](bool given, const char* what) {
    if (!given) throw CLI::RequiredError(what);
  };
  try {
    compute.format = fz.format = format;
    if (cmp->parsed()) {
      need(compute.diagram.given(), "--knot, --code or --code-file");
      need(compute.sw.given(), "--switch or --switch-file");
      return run_compute(compute);
    }
    if (tr->parsed()) {
      need(tr_src.given(), "--knot, --code or --code-file");
      return print_code(transform(tr_src.load(), parse_transform(tr_kind)), format, "transform");
    }
    if (cat->parsed()) {
      LongDiagram acc = resolve_operand(cat_operands.front());
      for (std::size_t k = 1; k < cat_operands.size(); ++k) acc = concat(acc, resolve_operand(cat_operands[k]));
      return print_code(acc, format, "concat");
    }
    if (desc->parsed()) {
      need(desc_src.given(), "--knot, --code or --code-file");
      return print_code(descent(desc_src.load()), format, "descent");
    }
    if (chk->parsed()) {
      need(chk_src.given(), "--switch or --switch-file");
      return run_check_switch(chk_src, format);
    }
    if (fuzz->parsed()) {
      need(fz.diagram.given(), "--knot, --code or --code-file");
      need(fz.sw.given(), "--switch or --switch-file");
      return run_fuzz(fz);
    }
    if (lst->parsed()) return run_list(format);
  } catch (const CLI::RequiredError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const longknot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::invalid;
  }
  return Exit::usage;
}
