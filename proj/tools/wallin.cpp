// wallin: decide whether a gallery is normal with respect to a set of sites.

#include "wallin/fixtures.hpp"
#include "wallin/gallery_file.hpp"
#include "wallin/generators.hpp"
#include "wallin/normality.hpp"
#include "wallin/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace wallin;

namespace {

constexpr int kExitNormal = 0;
constexpr int kExitNotNormal = 1;
constexpr int kExitError = 2;

Gallery resolve_gallery(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_gallery(arg);
  if (auto g = fixtures::by_name(arg)) return *g;
  throw std::runtime_error("'" + arg + "' is neither a file nor a built-in gallery (see `wallin fixtures`)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

GuardSiteSet select_sites(const SimplePolygon& poly, const Gallery& g, const std::string& choice) {
  if (choice == "corners") return choose_sites(poly, g, SiteChoice::Corners);
  if (choice == "marked") return choose_sites(poly, g, SiteChoice::Marked);
  if (choice == "all") return choose_sites(poly, g, SiteChoice::All);
  Gallery with_centroid = g;
  with_centroid.marked.push_back({"centroid", area_centroid(poly)});
  return sites_by_name(poly, with_centroid, split(choice, ','));
}

Point parse_point(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("expected x,y but got '" + text + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

std::string names_of(const GuardSiteSet& sites, SiteMask mask) {
  std::string out;
  for (auto i : mask_to_indices(mask)) out += (out.empty() ? "" : ",") + sites[i].name;
  return out;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
}

struct CheckArgs {
  std::string gallery;
  std::string sites = "corners";
  bool oracle_fallback = false;
  std::size_t grid = 64;
  std::string svg_path;
  bool minimal = false;
  bool json = false;
};

int run_check(const CheckArgs& a) {
  Gallery g = resolve_gallery(a.gallery);
  auto poly = SimplePolygon::validate(g.outline);
  auto sites = select_sites(poly, g, a.sites);
  CheckOptions opt;
  opt.oracle_fallback = a.oracle_fallback;
  opt.grid_resolution = a.grid;
  auto report = check_normal_wrt(poly, sites, opt);

  std::optional<WitnessSet> smallest;
  if (a.minimal && report.verdict == Verdict::NotNormal && !report.used_oracle) smallest = minimal_witness(poly, sites);

  if (a.json) {
    nlohmann::json doc;
    doc["gallery"] = g.name;
    doc["corners"] = poly.size();
    doc["sites"] = sites.size();
    doc["verdict"] = to_string(report.verdict);
    doc["regions"] = report.stats.regions;
    doc["sinks"] = report.stats.sinks;
    doc["sinks_checked"] = report.stats.checked;
    doc["used_oracle"] = report.used_oracle;
    if (report.witness) {
      doc["witness"] = split(names_of(sites, report.witness->sites), ',');
      doc["uncovered"] = {to_string(report.witness->uncovered_point.x), to_string(report.witness->uncovered_point.y)};
    }
    if (smallest) doc["minimal_witness"] = split(names_of(sites, smallest->sites), ',');
    if (report.degeneracy) doc["degeneracy"] = report.degeneracy->describe();
    doc["notes"] = report.notes;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "gallery " << g.name << ": " << poly.size() << " corners, " << sites.size() << " sites\n";
    std::cout << "verdict: " << to_string(report.verdict) << "\n";
    if (report.witness) {
      std::cout << "witness: {" << names_of(sites, report.witness->sites) << "} covers the walls but misses "
                << report.witness->uncovered_point << "\n";
    }
    if (smallest) std::cout << "minimal witness: {" << names_of(sites, smallest->sites) << "}\n";
    if (report.degeneracy) std::cout << report.degeneracy->describe() << "\n";
    for (const auto& n : report.notes) std::cout << "note: " << n << "\n";
    if (report.verdict == Verdict::InconclusiveDegenerate) {
      std::cout << "hint: rerun with --oracle-fallback for a brute-force verdict\n";
    }
    std::cout << "\n";
    std::cout << "verdict=" << (report.verdict == Verdict::Normal      ? "NORMAL"
                                : report.verdict == Verdict::NotNormal ? "NOT_NORMAL"
                                                                        : "INCONCLUSIVE")
              << "\n";
    std::cout << "corners=" << poly.size() << "\nsites=" << sites.size() << "\n";
    std::cout << "regions=" << report.stats.regions << "\nsinks=" << report.stats.sinks
              << "\nsinks_checked=" << report.stats.checked << "\n";
    std::cout << "used_oracle=" << (report.used_oracle ? 1 : 0) << "\n";
    if (report.witness) {
      std::cout << "witness=" << names_of(sites, report.witness->sites) << "\n";
      std::cout << "uncovered=" << to_string(report.witness->uncovered_point.x) << ","
                << to_string(report.witness->uncovered_point.y) << "\n";
    }
    if (smallest) std::cout << "minimal_witness=" << names_of(sites, smallest->sites) << "\n";
    std::printf("time_decomposition_ms=%.3f\ntime_wall_views_ms=%.3f\ntime_sink_checks_ms=%.3f\n",
                report.timings.decomposition_ms, report.timings.wall_views_ms, report.timings.sink_checks_ms);
  }

  if (!a.svg_path.empty()) {
    if (report.witness) {
      write_text(a.svg_path, svg::witness(poly, sites, report));
    } else {
      write_text(a.svg_path, svg::gallery(poly, sites.sites()));
    }
  }

  switch (report.verdict) {
    case Verdict::Normal: return kExitNormal;
    case Verdict::NotNormal: return kExitNotNormal;
    case Verdict::InconclusiveDegenerate: return kExitError;
  }
  return kExitError;
}

struct RenderArgs {
  std::string gallery;
  std::string what;
  std::string sites = "corners";
  std::vector<std::string> points;
  bool oracle_fallback = false;
  std::string out;
};

int run_render(const RenderArgs& a) {
  Gallery g = resolve_gallery(a.gallery);
  auto poly = SimplePolygon::validate(g.outline);
  std::string body;
  if (a.what == "gallery") {
    body = svg::gallery(poly, g.marked);
  } else if (a.what == "views") {
    std::vector<Site> chosen;
    if (a.points.empty()) {
      chosen = select_sites(poly, g, a.sites).sites();
    } else {
      for (const auto& p : a.points) chosen.push_back({p, parse_point(p)});
    }
    body = svg::views(poly, chosen);
  } else if (a.what == "decomposition" || a.what == "sinks") {
    auto d = build_decomposition(poly, select_sites(poly, g, a.sites));
    dual_graph_and_sinks(d);
    body = a.what == "sinks" ? svg::sinks(poly, d) : svg::decomposition(poly, d);
  } else if (a.what == "witness") {
    auto sites = select_sites(poly, g, a.sites);
    CheckOptions opt;
    opt.oracle_fallback = a.oracle_fallback;
    auto report = check_normal_wrt(poly, sites, opt);
    if (report.verdict != Verdict::NotNormal) {
      std::cerr << "no witness: verdict is " << to_string(report.verdict) << "\n";
      return kExitError;
    }
    body = svg::witness(poly, sites, report);
  } else {
    throw std::invalid_argument("unknown drawing '" + a.what + "'");
  }
  write_text(a.out, body);
  return 0;
}

int run_suffice(const std::string& arg) {
  Gallery g = resolve_gallery(arg);
  auto poly = SimplePolygon::validate(g.outline);
  auto sc = sufficient_conditions(poly);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "reflex corners: " << sc.reflex_count << " (at most two: " << yes(sc.reflex_le_2) << ")\n";
  std::cout << "star: " << yes(sc.star);
  if (sc.star) std::cout << " (kernel has " << sc.kernel.polygon.size() << " vertices)";
  std::cout << "\nconvex-cover: " << yes(sc.convex_cover);
  if (sc.cover) {
    std::cout << " (";
    for (std::size_t i = 0; i < sc.cover->size(); ++i) std::cout << (i ? " " : "") << (*sc.cover)[i];
    std::cout << ")";
  }
  std::cout << "\n" << (sc.implies_normal ? "=> normal" : "=> inconclusive by sufficient tests") << "\n";
  return 0;
}

struct GenerateArgs {
  std::string kind;
  std::size_t n = 8;
  std::size_t sites = 0;
  std::uint64_t seed = 1;
  std::size_t reflex = 2;
};

int run_generate(const GenerateArgs& a) {
  gen::Rng rng(a.seed);
  Gallery g;
  g.name = a.kind;
  if (a.kind == "star") {
    g.outline = gen::star_polygon(rng, a.n);
  } else if (a.kind == "few-reflex") {
    g.outline = gen::few_reflex_polygon(rng, a.n, a.reflex);
  } else if (a.kind == "simple") {
    g.outline = gen::simple_polygon(rng, a.n);
  } else if (a.kind == "pinwheel") {
    g.outline = gen::pinwheel_polygon(rng, a.n);
  } else if (a.kind == "spiral") {
    g.outline = gen::spiral_polygon(rng, a.n);
  } else {
    throw std::invalid_argument("unknown generator '" + a.kind + "'");
  }
  if (a.sites > 0) {
    auto poly = SimplePolygon::validate(g.outline);
    g.marked = gen::random_sites(rng, poly, a.sites);
  }
  std::cout << "# wallin generate " << a.kind << " --n " << a.n << " --seed " << a.seed << "\n";
  std::cout << format_gallery(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a gallery is normal: does every guard set that sees all walls see everything?"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "decide normality with respect to a site set");
  c->add_option("gallery", check.gallery, "gallery file or built-in name")->required();
  c->add_option("--sites", check.sites, "corners, marked, all, or a comma-separated list of site names");
  c->add_flag("--oracle-fallback", check.oracle_fallback, "answer degenerate inputs by brute force");
  c->add_option("--grid", check.grid, "grid resolution for the brute-force fallback")->check(CLI::Range(1, 4096));
  c->add_option("--svg", check.svg_path, "write the witness (or the gallery) as SVG");
  c->add_flag("--minimal", check.minimal, "also report a smallest witness");
  c->add_flag("--json", check.json, "print a JSON document instead of text");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "draw a gallery as SVG");
  r->add_option("gallery", render.gallery, "gallery file or built-in name")->required();
  r->add_option("what", render.what, "gallery, views, decomposition, sinks or witness")
      ->required()
      ->check(CLI::IsMember({"gallery", "views", "decomposition", "sinks", "witness"}));
  r->add_option("--sites", render.sites, "corners, marked, all, or site names");
  r->add_option("--site", render.points, "x,y of a viewpoint (views only; repeatable)");
  r->add_flag("--oracle-fallback", render.oracle_fallback, "brute-force fallback for witness drawings");
  r->add_option("-o,--svg", render.out, "output file (default stdout)");

  std::string suffice_arg;
  auto* s = app.add_subcommand("suffice", "evaluate the sufficient conditions for normality");
  s->add_option("gallery", suffice_arg, "gallery file or built-in name")->required();

  auto* f = app.add_subcommand("fixtures", "list built-in galleries");

  std::string export_name;
  auto* e = app.add_subcommand("export", "print a built-in gallery in file format");
  e->add_option("name", export_name, "built-in gallery")->required();

  GenerateArgs generate;
  auto* gsub = app.add_subcommand("generate", "print a random gallery in file format");
  gsub->add_option("kind", generate.kind, "star, few-reflex, simple, pinwheel or spiral")
      ->required()
      ->check(CLI::IsMember({"star", "few-reflex", "simple", "pinwheel", "spiral"}));
  gsub->add_option("--n", generate.n, "corners (arms for pinwheel, turns for spiral)");
  gsub->add_option("--reflex", generate.reflex, "reflex corners for few-reflex (0..2)");
  gsub->add_option("--sites", generate.sites, "number of random sites to add");
  gsub->add_option("--seed", generate.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex) == 0 ? 0 : kExitError;
  }

  try {
    if (*c) return run_check(check);
    if (*r) return run_render(render);
    if (*s) return run_suffice(suffice_arg);
    if (*f) {
      for (const auto& n : fixtures::names()) std::cout << n << "\n";
      return 0;
    }
    if (*e) {
      auto g = fixtures::by_name(export_name);
      if (!g) throw std::invalid_argument("unknown built-in gallery '" + export_name + "'");
      std::cout << format_gallery(*g);
      return 0;
    }
    if (*gsub) return run_generate(generate);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
