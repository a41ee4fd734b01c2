#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flopcomb/check.hpp"
#include "flopcomb/checked.hpp"
#include "flopcomb/emit.hpp"
#include "flopcomb/errors.hpp"

// command line surface. exit codes: 0 ok, 1 invariant failure, 2 bad config,
// 3 resource cap hit, 4 not a heart cone. artifacts are built fully in memory
// and written in one shot so failed runs leave nothing behind.

namespace {

using namespace flopcomb;

std::vector<i64> parse_int_list(const std::string& text, const char* what) {
  std::vector<i64> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    if (tok.empty()) throw config_error(std::string(what) + ": empty entry in list");
    try {
      size_t used = 0;
      i64 v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw config_error(std::string(what) + ": bad integer '" + tok + "'");
    }
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_marked(const diagram& d, const std::string& text) {
  std::vector<int> marked;
  for (i64 v : parse_int_list(text, "marked")) {
    if (!d.has_vertex(static_cast<int>(v)))
      throw config_error("marked: vertex " + std::to_string(v) + " not in " + d.name());
    marked.push_back(static_cast<int>(v));
  }
  std::sort(marked.begin(), marked.end());
  if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
    throw config_error("marked: repeated vertex");
  if (static_cast<int>(marked.size()) >= d.n_vertices())
    throw config_error("marked set must be a proper subset of the vertex set");
  return marked;
}

std::size_t resource_cap() {
  const char* env = std::getenv("FLOPCOMB_MAX_CHAMBERS");
  if (!env) return 100000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw config_error("FLOPCOMB_MAX_CHAMBERS must be a positive integer");
  return static_cast<std::size_t>(v);
}

int sector_of(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  if (s == "0") return 0;
  throw config_error("sector must be one of +, 0, -");
}

void write_artifact(const std::string& out_path, const std::string& artifact) {
  if (out_path.empty()) {
    std::cout << artifact;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw config_error("cannot open output file: " + out_path);
  f << artifact;
  f.flush();
  if (!f) throw config_error("cannot write output file: " + out_path);
}

struct options {
  std::string diagram_name;
  std::string marked_text;
  std::string sector_text = "+";
  int box = 1;
  std::string format = "json";
  std::string out_path;
  std::string point_text;
  bool fault = false;
};

int run_mutclass(const options& o) {
  diagram d = parse_diagram(o.diagram_name);
  std::vector<int> marked = parse_marked(d, o.marked_text);
  if (o.format == "svg") throw config_error("mutclass has no svg form");
  mutation_class mc = enumerate_mutation_class(d, marked, resource_cap());
  std::string artifact;
  if (o.format == "dot")
    artifact = dot_mutation_class(mc);
  else if (o.format == "csv")
    artifact = csv_mutation_class(mc);
  else
    artifact = json_mutation_class(mc);
  write_artifact(o.out_path, artifact);
  return 0;
}

int run_chambers(const options& o) {
  context c = make_context(o.diagram_name, parse_marked(parse_diagram(o.diagram_name), o.marked_text));
  int sector = sector_of(o.sector_text);
  if (o.box < 1) throw config_error("box level must be at least 1");
  chamber_listing l = build_chamber_listing(c, sector, o.box, resource_cap());
  std::string artifact;
  if (o.format == "csv")
    artifact = csv_chambers(l);
  else if (o.format == "dot")
    artifact = dot_chambers(l);
  else if (o.format == "svg")
    artifact = svg_chambers(l);
  else
    artifact = json_chambers(l);
  write_artifact(o.out_path, artifact);
  return 0;
}

int run_classify(const options& o) {
  context c = make_context(o.diagram_name, parse_marked(parse_diagram(o.diagram_name), o.marked_text));
  if (o.format != "json") throw config_error("classify prints json only");
  std::vector<i64> pt = parse_int_list(o.point_text, "point");
  if (static_cast<int>(pt.size()) != c.dim())
    throw config_error("point needs " + std::to_string(c.dim()) + " coordinates");
  cone_ref ref = locate(c, pt);
  heart_descriptor h = classify_cone(c, ref);
  write_artifact(o.out_path, json_heart(h));
  return 0;
}

int run_checkcmd(const options& o) {
  context c = make_context(o.diagram_name, parse_marked(parse_diagram(o.diagram_name), o.marked_text));
  if (o.format != "json") throw config_error("check prints json only");
  check_report r = run_check(c, o.box, resource_cap(), o.fault);
  write_artifact(o.out_path, json_check_report(r));
  if (!r.pass) {
    std::cerr << "invariant failure: " << r.failed_property << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"chamber and heart combinatorics of affine arrangements"};
  app.require_subcommand(1);

  options o;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--diagram", o.diagram_name, "diagram name, e.g. A1~ or E7~")->required();
    sub->add_option("--marked", o.marked_text, "comma list of marked vertex ids");
    if (with_format)
      sub->add_option("--format", o.format, "output format")
          ->check(CLI::IsMember({"json", "dot", "svg", "csv"}));
    sub->add_option("--out", o.out_path, "write the artifact to this file");
  };

  CLI::App* mut = app.add_subcommand("mutclass", "exchange graph of the marked subset");
  add_common(mut, true);

  CLI::App* cham = app.add_subcommand("chambers", "chamber listing of one sector");
  add_common(cham, true);
  cham->add_option("--sector", o.sector_text, "+, 0 or -")
      ->check(CLI::IsMember({"+", "0", "-"}));
  cham->add_option("--box", o.box, "box level for the open sectors");

  CLI::App* cls = app.add_subcommand("classify", "heart descriptor of the cone at a point");
  add_common(cls, true);
  cls->add_option("--point", o.point_text, "comma list of restricted coordinates")->required();

  CLI::App* chk = app.add_subcommand("check", "run the invariant suites");
  add_common(chk, true);
  chk->add_option("--box", o.box, "box level the suites run at");
  chk->add_flag("--fault-inject", o.fault, "corrupt one cartan entry to exercise the failure path")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mut->parsed()) return run_mutclass(o);
    if (cham->parsed()) return run_chambers(o);
    if (cls->parsed()) return run_classify(o);
    return run_checkcmd(o);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const resource_cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const not_heart_cone_error& e) {
    std::cerr << "not a heart cone: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
}
