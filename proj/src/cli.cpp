#include "circiso/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "circiso/classifier.hpp"
#include "circiso/config_io.hpp"
#include "circiso/isomorphism.hpp"
#include "circiso/svg.hpp"

namespace circiso::cli {

namespace {

struct Options {
  std::string file;
  std::string file_b;
  int bound = 8;
  bool strict = false;
  std::string vector;
  bool closing = false;
  bool bisect = false;
  std::string width = "1/1073741824";
  bool table = false;
  int seeds = 2;
  int depth = 3;
  std::string point;
  std::string svg_path;
  std::string word_action;
  std::string word_text;
  int letters = 0;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content)) throw std::runtime_error("cannot write " + path);
}

SignatureVector parse_vector3(const std::string& text) {
  SignatureVector v = parse_signature(text);
  if (v.size() != 3) throw WordError(WordError::Kind::wrong_dimension, "expected three entries: v1,v2,v3");
  return v;
}

int do_classify(const Options& o, std::ostream& out) {
  const ConfigK config = load_config(o.file);
  const ClassLabel label = classify(config, o.bound);
  out << to_string(label) << '\n';
  if (const auto* cycle = std::get_if<CycleLabel>(&label)) {
    out << "witness " << to_string(cycle->witness_word) << " at " << to_string(cycle->witness_point) << '\n';
    return kExitOk;
  }
  return o.strict ? kExitInconclusive : kExitOk;
}

int do_is_cycle(const Options& o, std::ostream& out) {
  const ConfigK config = load_config(o.file);
  const SignatureVector v = parse_signature(o.vector);
  out << (is_cycle(config, v) ? "yes" : "no") << '\n';
  return kExitOk;
}

int do_realize(const Options& o, std::ostream& out) {
  const SignatureVector v = parse_vector3(o.vector);
  if (o.closing) {
    const auto config = realize_by_closing_any(v);
    if (!config) {
      out << "no configuration found on the search grid\n";
      return kExitFailure;
    }
    out << serialize_config(*config);
    return kExitOk;
  }
  const RealizationInterval interval = realize_by_bisection(v, parse_rational(o.width));
  out << "interval " << to_string(interval) << '\n';
  if (interval.exact_root) out << "exact-root " << to_string(*interval.exact_root) << '\n';
  return kExitOk;
}

int do_iso(const Options& o, std::ostream& out) {
  const ConfigK a = load_config(o.file);
  const ConfigK b = load_config(o.file_b);
  const IsoVerdict verdict = decide_iso(a, b, o.bound);
  out << to_string(verdict) << '\n';
  if (o.table && std::holds_alternative<Isomorphic>(verdict)) {
    const auto table = build_partial_iso(a, b, verdict, words_up_to(a.l(), o.depth), o.seeds);
    out << serialize(table);
  }
  const bool inconclusive = std::holds_alternative<ConditionallyIsomorphic>(verdict);
  return inconclusive && o.strict ? kExitInconclusive : kExitOk;
}

int do_orbit(const Options& o, std::ostream& out) {
  const ConfigK config = load_config(o.file);
  const auto points = orbit(config, parse_point(o.point), o.depth);
  for (const RPoint& p : points) out << to_string(p) << '\n';
  if (!o.svg_path.empty()) write_file(o.svg_path, render_svg(config, SvgOverlays{points, std::nullopt}));
  return kExitOk;
}

int do_word(const Options& o, std::ostream& out) {
  const std::vector<Letter> raw = o.word_text == "e" ? std::vector<Letter>{} : parse_letters(o.word_text);
  int l = o.letters;
  if (l == 0) l = raw.empty() ? 1 : *std::max_element(raw.begin(), raw.end());
  const Word g = reduce(raw, l);
  if (o.word_action == "reduce") {
    out << to_string(g) << '\n';
  } else if (o.word_action == "signature") {
    out << to_string(signature(g)) << '\n';
  } else {
    out << to_string(normal_form(g)) << '\n';
  }
  return kExitOk;
}

int do_render(const Options& o, std::ostream& out) {
  const ConfigK config = load_config(o.file);
  SvgOverlays overlays;
  if (!o.vector.empty()) overlays.cycle = parse_signature(o.vector);
  write_file(o.svg_path, render_svg(config, overlays));
  out << "wrote " << o.svg_path << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact betweenness classification of circles with interior points", "circiso"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "Primitive cycle of a three-point configuration");
  classify_cmd->add_option("file", o.file, "configuration file")->required();
  classify_cmd->add_option("--bound", o.bound, "largest v2 searched")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--strict", o.strict, "exit 3 when no cycle is found within the bound");

  auto* cycle_cmd = app.add_subcommand("is-cycle", "Test whether a signature vector is a cycle");
  cycle_cmd->add_option("file", o.file, "configuration file")->required();
  cycle_cmd->add_option("--v", o.vector, "v1,v2,v3")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Construct a configuration with a given primitive cycle");
  realize_cmd->add_option("--v", o.vector, "v1,v2,v3")->required();
  auto* closing_flag = realize_cmd->add_flag("--closing", o.closing, "closing-chord construction");
  auto* bisect_flag = realize_cmd->add_flag("--bisect", o.bisect, "bisection on the middle point");
  realize_cmd->add_option("--width", o.width, "target interval width (rational)")->needs(bisect_flag);
  closing_flag->excludes(bisect_flag);

  auto* iso_cmd = app.add_subcommand("iso", "Decide betweenness isomorphism of two configurations");
  iso_cmd->add_option("file_a", o.file, "first configuration")->required();
  iso_cmd->add_option("file_b", o.file_b, "second configuration")->required();
  iso_cmd->add_option("--bound", o.bound, "largest v2 searched")->check(CLI::PositiveNumber);
  iso_cmd->add_flag("--strict", o.strict, "exit 3 on a conditional verdict");
  auto* table_flag = iso_cmd->add_flag("--table", o.table, "print a partial isomorphism table");
  iso_cmd->add_option("--seeds", o.seeds, "orbit seeds in the table")->check(CLI::PositiveNumber)->needs(table_flag);
  iso_cmd->add_option("--depth", o.depth, "longest sample word")->check(CLI::NonNegativeNumber)->needs(table_flag);

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a circle point under words up to a length");
  orbit_cmd->add_option("file", o.file, "configuration file")->required();
  orbit_cmd->add_option("--point", o.point, "x,y on the circle")->required();
  orbit_cmd->add_option("--depth", o.depth, "longest word")->required()->check(CLI::NonNegativeNumber);
  orbit_cmd->add_option("--svg", o.svg_path, "write a picture");

  auto* word_cmd = app.add_subcommand("word", "Word algebra");
  word_cmd->add_option("action", o.word_action, "reduce, signature or normal")
      ->required()
      ->check(CLI::IsMember({"reduce", "signature", "normal"}));
  word_cmd->add_option("word", o.word_text, "comma-separated letters or e")->required();
  word_cmd->add_option("--l", o.letters, "alphabet size (default: largest letter)")->check(CLI::PositiveNumber);

  auto* render_cmd = app.add_subcommand("render", "Draw a configuration as SVG");
  render_cmd->add_option("file", o.file, "configuration file")->required();
  render_cmd->add_option("--cycle", o.vector, "v1,v2,v3 to draw as a closed polygon");
  render_cmd->add_option("--svg", o.svg_path, "output path")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (realize_cmd->parsed() && !o.closing && !o.bisect) {
    err << "error: realize needs --closing or --bisect\n\n" << realize_cmd->help();
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(o, out);
    if (cycle_cmd->parsed()) return do_is_cycle(o, out);
    if (realize_cmd->parsed()) return do_realize(o, out);
    if (iso_cmd->parsed()) return do_iso(o, out);
    if (orbit_cmd->parsed()) return do_orbit(o, out);
    if (word_cmd->parsed()) return do_word(o, out);
    return do_render(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace circiso::cli
