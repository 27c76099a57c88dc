#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "outerspatial/generators.hpp"
#include "outerspatial/io.hpp"
#include "outerspatial/render.hpp"
#include "outerspatial/report.hpp"

namespace outerspatial::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double cap = kDefaultCap;
  std::uint64_t seed = 1;
  std::string format = "dot";
  std::string file;
  std::string second;
  std::string link_vertex;
  bool no_fast_path = false;
  std::vector<std::string> generator;
  RandomParams random;
};

TwoComplex load(const std::string& path, bool strict = true) {
  const std::string text = read_text(path);
  return strict ? parse_complex(text) : parse_complex_lenient(text);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const TwoComplex c = load(o.file, false);
  const auto diags = validate(c);
  if (diags.empty()) {
    out << "valid: " << c.graph().vertex_count() << " vertices, " << c.graph().edge_count() << " edges, "
        << c.faces().size() << " faces\n";
    return 0;
  }
  for (const Diagnostic& d : diags) out << to_string(d.kind) << ' ' << d.element << ": " << d.message << '\n';
  return 1;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const TwoComplex c = load(o.file);
  const Verdict v = decide_outerspatial(c, DecideOptions{.triangle_fast_path = !o.no_fast_path});
  out << format_verdict(c, v);
  return exit_code(v);
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const TwoComplex c = load(o.file);
  const NestedSearch s = brute_force_outerspatial(c, o.cap);
  Verdict v = s.certificate ? Verdict{Outerspatial{*s.certificate}}
                            : Verdict{NotOuterspatial{ExhaustiveRefutation{s.systems_examined}}};
  out << format_verdict(c, v);
  return exit_code(v);
}

int cmd_nested(const Options& o, std::ostream& out) {
  const Graph g = load(o.file, false).graph();
  const NamedCycles nc = parse_cycles(g, read_text(o.second));
  const Verdict v = decide_nested_plane(g, nc.cycles, o.cap);
  out << format_verdict(g, nc.names, v);
  return exit_code(v);
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const RenderFormat format = o.format == "svg" ? RenderFormat::Svg : RenderFormat::Dot;
  if (!o.link_vertex.empty()) {
    const TwoComplex c = load(o.file, false);
    const auto v = c.graph().find_vertex(o.link_vertex);
    if (!v) throw UsageError("unknown vertex '" + o.link_vertex + "'");
    out << render_link(link_graph(c, *v), format);
    return 0;
  }
  const TwoComplex c = load(o.file);
  const Verdict v = decide_outerspatial(c);
  const auto* yes = std::get_if<Outerspatial>(&v);
  if (!yes) {
    err << "no certificate to draw: verdict " << verdict_name(v) << '\n';
    return exit_code(v);
  }
  out << render_embedding(c.graph(), yes->certificate, format);
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const TwoComplex c = load(o.file);
  const std::string report = read_text(o.second);
  NestedCertificate cert;
  try {
    cert = parse_certificate(c.graph(), face_names(c), report);
  } catch (const ParseError& e) {
    out << "certificate rejected: " << e.what() << '\n';
    return 1;
  }
  std::string why;
  if (verify_certificate(c, cert, &why)) {
    out << "certificate verified\n";
    return 0;
  }
  out << "certificate rejected: " << why << '\n';
  return 1;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(s, &used);
    if (used == s.size()) return n;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got '" + s + "'");
}

TwoComplex generated(const Options& o) {
  const auto& a = o.generator;
  const std::string& name = a[0];
  const auto arg = [&](std::size_t count) {
    if (a.size() != count + 1) throw UsageError("generate " + name + " takes " + std::to_string(count) + " argument(s)");
  };
  if (name == "tetra") {
    arg(0);
    return tetrahedron();
  }
  if (name == "torus7") {
    arg(0);
    return torus7();
  }
  if (name == "rp2") {
    arg(0);
    return projective_plane6();
  }
  if (name == "bipyramid" || name == "bipyramid-equator") {
    arg(1);
    const int k = parse_int(a[1]);
    if (k < 3) throw UsageError("bipyramid needs at least 3 equator vertices");
    return name == "bipyramid" ? bipyramid(k) : bipyramid_with_equator(k);
  }
  if (name == "cone") {
    arg(1);
    if (a[1] == "K4") return graph_cone(complete_graph(4));
    if (a[1] == "K23") return graph_cone(k23());
    return graph_cone(load(a[1], false).graph());
  }
  if (name == "random") {
    arg(0);
    const RandomParams& p = o.random;
    if (p.vertices < 4 || p.vertices > 12 || p.flips < 0 || p.merges < 0 || p.extra_edges < 0 || p.extra_cycles < 0) {
      throw UsageError("random parameters out of range");
    }
    RandomParams q = p;
    q.cap = o.cap;
    return random_complex(o.seed, q);
  }
  throw UsageError("unknown generator '" + name + "'");
}

}  // namespace

int exit_code(const Verdict& verdict) {
  switch (verdict.index()) {
    case 0: return kOuterspatial;
    case 1: return kNotOuterspatial;
    default: return kHypothesisViolated;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outerspatial 2-complexes: decide, certify, refute."};
  app.name("outerspatial");
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--cap", o.cap, "enumeration cap for the oracle")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for random generation")->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "check a complex file and list its defects");
  validate_cmd->add_option("file", o.file)->required();
  auto* links = app.add_subcommand("links", "print every link graph with its outerplanarity status");
  links->add_option("file", o.file)->required();
  auto* decide = app.add_subcommand("decide", "decide outerspatiality with a certificate or obstruction");
  decide->add_option("file", o.file)->required();
  decide->add_flag("--no-fast-path", o.no_fast_path, "skip the all-triangles shortcut");
  auto* nested = app.add_subcommand("nested", "nested plane embedding of a graph for a cycle list");
  nested->add_option("graph", o.file)->required();
  nested->add_option("cycles", o.second)->required();
  auto* oracle = app.add_subcommand("oracle", "decide by exhaustive rotation-system search");
  oracle->add_option("file", o.file)->required();
  auto* surface = app.add_subcommand("surface", "classify the complex as a surface per component");
  surface->add_option("file", o.file)->required();
  auto* render = app.add_subcommand("render", "draw a certificate embedding or a link graph");
  render->add_option("file", o.file)->required();
  render->add_option("--format", o.format)->check(CLI::IsMember({"dot", "svg"}))->capture_default_str();
  render->add_option("--link", o.link_vertex, "draw the link at this vertex");
  auto* check = app.add_subcommand("check", "re-verify the certificate in a decide report");
  check->add_option("file", o.file)->required();
  check->add_option("report", o.second)->required();
  auto* generate = app.add_subcommand(
      "generate", "print a named complex: tetra, bipyramid N, bipyramid-equator N, torus7, rp2, cone K4|K23|FILE, random");
  generate->add_option("name", o.generator)->required()->expected(1, 2);
  generate->add_option("--vertices", o.random.vertices)->capture_default_str();
  generate->add_option("--flips", o.random.flips)->capture_default_str();
  generate->add_option("--merges", o.random.merges)->capture_default_str();
  generate->add_option("--edges", o.random.extra_edges, "extra edges")->capture_default_str();
  generate->add_option("--cycles", o.random.extra_cycles, "extra cycle faces")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*links) {
      out << format_links(load(o.file, false));
      return 0;
    }
    if (*decide) return cmd_decide(o, out);
    if (*nested) return cmd_nested(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*surface) {
      const TwoComplex c = load(o.file, false);
      out << format_surface(c, classify_surface(c));
      return 0;
    }
    if (*render) return cmd_render(o, out, err);
    if (*check) return cmd_check(o, out);
    out << print_complex(generated(o));
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace outerspatial::cli
