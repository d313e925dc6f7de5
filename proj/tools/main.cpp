#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubecomb/bending.hpp"
#include "cubecomb/complex.hpp"
#include "cubecomb/duality.hpp"
#include "cubecomb/hyperplane.hpp"
#include "cubecomb/json_io.hpp"
#include "cubecomb/transforms.hpp"

using nlohmann::ordered_json;

namespace {

struct Options {
  long sample = 0;
  int jobs = 1;  // accepted for interface stability; execution is serial
};

cubecomb::CubeComplex load_complex(const std::string& path, const Options& opt,
                                   std::string* name_out = nullptr) {
  auto data = cubecomb::read_complex_file(path);
  if (name_out) *name_out = data.name;
  cubecomb::ValidateOptions v;
  v.sample_triples = opt.sample;
  return cubecomb::validate_complex(data.vertices, data.edges, v);
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int hyperplane_by_id(const std::vector<cubecomb::Hyperplane>& ws,
                     const std::string& id) {
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i].id == id) return static_cast<int>(i);
  cubecomb::fail(cubecomb::Errc::NotSimple, "unknown hyperplane id: " + id);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

ordered_json names_of(const cubecomb::CubeComplex& X,
                      const std::vector<int>& verts) {
  auto a = ordered_json::array();
  for (int v : verts) a.push_back(X.name(v));
  return a;
}

void cmd_validate(const std::string& path, const Options& opt) {
  std::string name;
  auto X = load_complex(path, opt, &name);
  auto ws = cubecomb::hyperplanes(X);
  ordered_json j;
  if (!name.empty()) j["name"] = name;
  j["vertices"] = X.size();
  j["edges"] = X.edges().size();
  j["cubes"] = X.cube_count();
  {
    auto counts = ordered_json::array();
    for (const auto& level : X.cubes()) counts.push_back(level.size());
    j["cube_counts"] = std::move(counts);
  }
  j["dimension"] = X.dimension();
  {
    auto ids = ordered_json::array();
    for (const auto& w : ws) ids.push_back(w.id);
    j["hyperplanes"] = std::move(ids);
  }
  j["delta_doubled"] = cubecomb::hyperbolicity_delta_doubled(X);
  {
    auto triples = ordered_json::array();
    for (const auto& t : cubecomb::facing_triples(X, ws))
      triples.push_back({ws[t[0]].id, ws[t[1]].id, ws[t[2]].id});
    j["facing_triples"] = std::move(triples);
  }
  {
    auto chain = ordered_json::array();
    for (int w : cubecomb::longest_chain(X, ws)) chain.push_back(ws[w].id);
    j["longest_chain"] = std::move(chain);
  }
  j["derham_factors"] = cubecomb::derham(X).classes.size();
  // Baldness report: strongly parallel pairs and non-singleton classes.
  {
    auto pairs = ordered_json::array();
    for (size_t a = 0; a < ws.size(); ++a)
      for (size_t b = a + 1; b < ws.size(); ++b)
        if (cubecomb::strongly_parallel(X, ws, static_cast<int>(a),
                                        static_cast<int>(b)))
          pairs.push_back({ws[a].id, ws[b].id});
    j["strongly_parallel_pairs"] = std::move(pairs);
    auto pp = cubecomb::para_classes(X, ws);
    auto classes = ordered_json::array();
    for (const auto& cls : pp.hyperplane_classes) {
      if (cls.size() < 2) continue;
      auto ids = ordered_json::array();
      for (int w : cls) ids.push_back(ws[w].id);
      classes.push_back(std::move(ids));
    }
    j["nonsingleton_para_classes"] = std::move(classes);
  }
  emit(j);
}

void cmd_dual(const std::string& pocset_path, const std::string& walls_path) {
  if (!pocset_path.empty()) {
    auto data = cubecomb::read_pocset_file(pocset_path);
    auto P = cubecomb::Pocset::build(data.elements, data.involution, data.order);
    auto D = cubecomb::dual_complex(P);
    emit(cubecomb::complex_to_json(D.complex, "dual"));
    return;
  }
  auto W = cubecomb::read_wall_file(walls_path);
  auto R = cubecomb::wallspace_dual(W);
  std::vector<std::string> comments;
  for (size_t i = 0; i < W.points.size(); ++i)
    comments.push_back("principal " + W.points[i] + " -> " +
                       R.principal_vertex[i]);
  emit(cubecomb::complex_to_json(R.dual.complex, "dual", comments));
}

void cmd_subdivide(const std::string& path, const Options& opt) {
  std::string name;
  auto X = load_complex(path, opt, &name);
  auto S = cubecomb::subdivide(X);
  auto ws = cubecomb::hyperplanes(X);
  auto ws2 = cubecomb::hyperplanes(S.subdivided);
  ordered_json map;
  {
    ordered_json emb;
    for (int v = 0; v < X.size(); ++v)
      emb[X.name(v)] = S.subdivided.name(S.vertex_embedding[v]);
    map["vertex_embedding"] = std::move(emb);
    ordered_json cover;
    for (size_t i = 0; i < ws2.size(); ++i)
      cover[ws2[i].id] = ws[S.hyperplane_cover[i]].id;
    map["hyperplane_cover"] = std::move(cover);
  }
  cubecomb::write_text_file(stem_of(path) + ".subdivision-map.json",
                            map.dump(2) + "\n");
  emit(cubecomb::complex_to_json(
      S.subdivided, name.empty() ? "subdivided" : name + "-subdivided"));
}

void cmd_compress(const std::string& path, const Options& opt) {
  std::string name;
  auto X = load_complex(path, opt, &name);
  auto ws = cubecomb::hyperplanes(X);
  auto R = cubecomb::compress(X);
  ordered_json side;
  {
    auto hcls = ordered_json::array();
    for (const auto& cls : R.classes.halfspace_classes) hcls.push_back(cls);
    side["halfspace_classes"] = std::move(hcls);
    auto wcls = ordered_json::array();
    for (const auto& cls : R.classes.hyperplane_classes) {
      auto ids = ordered_json::array();
      for (int w : cls) ids.push_back(ws[w].id);
      wcls.push_back(std::move(ids));
    }
    side["hyperplane_classes"] = std::move(wcls);
  }
  cubecomb::write_text_file(stem_of(path) + ".para-classes.json",
                            side.dump(2) + "\n");
  emit(cubecomb::complex_to_json(
      R.compressed, name.empty() ? "compressed" : name + "-compressed"));
}

void cmd_derham(const std::string& path, const Options& opt) {
  std::string name;
  auto X = load_complex(path, opt, &name);
  auto ws = cubecomb::hyperplanes(X);
  auto D = cubecomb::derham(X);
  ordered_json j;
  j["factors"] = D.factors.size();
  {
    auto classes = ordered_json::array();
    for (const auto& cls : D.classes) {
      auto ids = ordered_json::array();
      for (int w : cls) ids.push_back(ws[w].id);
      classes.push_back(std::move(ids));
    }
    j["classes"] = std::move(classes);
  }
  auto files = ordered_json::array();
  for (size_t i = 0; i < D.factors.size(); ++i) {
    std::string fname = stem_of(path) + ".factor" + std::to_string(i) + ".json";
    cubecomb::write_text_file(
        fname, cubecomb::complex_to_json(D.factors[i],
                                         "factor" + std::to_string(i))
                       .dump(2) +
                   "\n");
    files.push_back(fname);
  }
  j["files"] = std::move(files);
  emit(j);
}

void cmd_quotient(const std::string& path, const std::string& keep_arg,
                  const Options& opt) {
  std::string name;
  auto X = load_complex(path, opt, &name);
  auto ws = cubecomb::hyperplanes(X);
  std::vector<int> keep;
  for (const auto& id : split_commas(keep_arg))
    keep.push_back(hyperplane_by_id(ws, id));
  auto R = cubecomb::restriction_quotient(X, keep);
  ordered_json map;
  for (int v = 0; v < X.size(); ++v)
    map[X.name(v)] = R.quotient.name(R.vertex_map[v]);
  cubecomb::write_text_file(stem_of(path) + ".quotient-map.json",
                            map.dump(2) + "\n");
  emit(cubecomb::complex_to_json(
      R.quotient, name.empty() ? "quotient" : name + "-quotient"));
}

void cmd_trim(const std::string& path, int radius, const Options& opt) {
  std::string name;
  auto X = load_complex(path, opt, &name);
  auto R = cubecomb::trim_shallow(X, radius);
  ordered_json removed;
  removed["removed"] = R.removed;
  cubecomb::write_text_file(stem_of(path) + ".trim-removed.json",
                            removed.dump(2) + "\n");
  emit(cubecomb::complex_to_json(R.trimmed,
                                 name.empty() ? "trimmed" : name + "-trimmed"));
}

void cmd_corner(const std::string& path, const std::string& h1,
                const std::string& h2, const Options& opt) {
  auto X = load_complex(path, opt);
  auto ws = cubecomb::hyperplanes(X);
  auto parse = [&](const std::string& h) {
    if (h.size() < 2 || (h.back() != '+' && h.back() != '-'))
      throw cubecomb::ParseError("halfspace must end in + or -: " + h);
    return std::pair<int, bool>(
        hyperplane_by_id(ws, h.substr(0, h.size() - 1)), h.back() == '+');
  };
  auto [w1, p1] = parse(h1);
  auto [w2, p2] = parse(h2);
  auto R = cubecomb::corner_halfspace(X, ws, w1, p1, w2, p2);
  ordered_json j;
  j["halfspace"] = R.halfspace ? ordered_json(*R.halfspace) : ordered_json();
  j["failed_hypotheses"] = R.failed_hypotheses;
  emit(j);
}

struct BendContext {
  cubecomb::CubeComplex X;
  std::vector<cubecomb::Hyperplane> ws;
  cubecomb::SwitchSystem system;
  cubecomb::SwitchGraph graph;
};

BendContext load_bend(const std::string& path, const Options& opt) {
  auto data = cubecomb::read_switch_file(path);
  BendContext ctx;
  ctx.X = load_complex(data.complex_path, opt);
  ctx.ws = cubecomb::hyperplanes(ctx.X);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : data.switches)
    pairs.emplace_back(hyperplane_by_id(ctx.ws, a),
                       hyperplane_by_id(ctx.ws, b));
  ctx.system = cubecomb::validate_switch_system(ctx.X, ctx.ws, pairs,
                                                data.spacing);
  ctx.graph = cubecomb::switch_graph(ctx.X, ctx.ws, ctx.system);
  return ctx;
}

void cmd_bend_graph(const std::string& path, const Options& opt) {
  auto ctx = load_bend(path, opt);
  ordered_json j;
  j["spacing"] = ctx.system.spacing;
  j["delta_doubled"] = ctx.system.delta_doubled;
  j["forest_guaranteed"] = ctx.system.forest_guaranteed;
  j["forest"] = ctx.graph.forest;
  {
    auto pieces = ordered_json::array();
    for (size_t p = 0; p < ctx.graph.pieces.size(); ++p) {
      ordered_json e;
      e["id"] = p;
      e["hyperplane"] = ctx.ws[ctx.graph.pieces[p].hyperplane].id;
      e["dual_edges"] = ctx.graph.pieces[p].dual_edge_ids.size();
      pieces.push_back(std::move(e));
    }
    j["pieces"] = std::move(pieces);
  }
  {
    auto sw = ordered_json::array();
    for (size_t s = 0; s < ctx.graph.switches.size(); ++s) {
      ordered_json e;
      e["pair"] = {ctx.ws[ctx.graph.switches[s].first].id,
                   ctx.ws[ctx.graph.switches[s].second].id};
      e["slots"] = ctx.graph.slots[s];
      sw.push_back(std::move(e));
    }
    j["switches"] = std::move(sw);
  }
  emit(j);
}

void cmd_bend_enumerate(const std::string& path, long limit,
                        const Options& opt) {
  auto ctx = load_bend(path, opt);
  auto E = cubecomb::enumerate_crooked(ctx.graph, limit);
  ordered_json j;
  j["count"] = E.subtrees.size();
  j["limit_exceeded"] = E.limit_exceeded;
  auto list = ordered_json::array();
  for (size_t i = 0; i < E.subtrees.size(); ++i) {
    ordered_json e;
    e["id"] = i;
    e["pieces"] = E.subtrees[i].pieces;
    auto sw = ordered_json::array();
    for (const auto& [s, slots] : E.subtrees[i].switches) {
      ordered_json se;
      se["switch"] = {ctx.ws[ctx.graph.switches[s].first].id,
                      ctx.ws[ctx.graph.switches[s].second].id};
      se["slots"] = slots;
      sw.push_back(std::move(se));
    }
    e["switches"] = std::move(sw);
    list.push_back(std::move(e));
  }
  j["crooked"] = std::move(list);
  emit(j);
}

void cmd_bend_apply(const std::string& path, long crooked_id,
                    bool keep_original, const Options& opt) {
  auto ctx = load_bend(path, opt);
  auto E = cubecomb::enumerate_crooked(ctx.graph, crooked_id + 1);
  if (crooked_id < 0 ||
      crooked_id >= static_cast<long>(E.subtrees.size()))
    cubecomb::fail(cubecomb::Errc::NotSimple,
                   "no crooked subtree with id " + std::to_string(crooked_id));
  const auto& tree = E.subtrees[crooked_id];
  auto R = cubecomb::realize(ctx.X, ctx.ws, ctx.graph, tree);

  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> walls;
  if (keep_original) {
    std::vector<bool> drop(ctx.ws.size(), false);
    for (int p : tree.pieces) drop[ctx.graph.pieces[p].hyperplane] = true;
    for (size_t w = 0; w < ctx.ws.size(); ++w) {
      if (drop[w]) continue;
      std::vector<std::string> plus, minus;
      for (int v : ctx.ws[w].plus) plus.push_back(ctx.X.name(v));
      for (int v : ctx.ws[w].minus) minus.push_back(ctx.X.name(v));
      walls.emplace_back(std::move(plus), std::move(minus));
    }
  }
  {
    std::vector<std::string> a, b;
    for (int v : R.side_a) a.push_back(ctx.X.name(v));
    for (int v : R.side_b) b.push_back(ctx.X.name(v));
    walls.emplace_back(std::move(a), std::move(b));
  }
  auto D = cubecomb::recubulate(ctx.X, walls);
  std::vector<std::string> comments;
  comments.push_back("crooked " + std::to_string(crooked_id));
  comments.push_back("sides " + std::to_string(R.side_a.size()) + "/" +
                     std::to_string(R.side_b.size()));
  comments.push_back("track edges " + std::to_string(R.track.size()));
  comments.push_back("quasiconvexity defect " +
                     std::to_string(R.quasiconvexity_defect));
  comments.push_back("walls " + std::to_string(walls.size()));
  emit(cubecomb::complex_to_json(D.dual.complex, "recubulated", comments));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"median-graph cube complex toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--sample", opt.sample,
                 "median spot-check triple count (0 = exhaustive)");
  app.add_option("--jobs", opt.jobs, "worker count (output is identical)");

  std::string file, pocset_path, walls_path, keep_arg, h1, h2;
  int radius = 0;
  long limit = 1000000, crooked_id = 0;
  bool keep_original = false;

  auto* validate = app.add_subcommand("validate", "full structure report");
  validate->add_option("file", file)->required();

  auto* dual = app.add_subcommand("dual", "dual complex of a pocset or wallspace");
  auto* po = dual->add_option("--pocset", pocset_path);
  auto* wo = dual->add_option("--walls", walls_path);
  po->excludes(wo);

  auto* subdivide = app.add_subcommand("subdivide", "cubical subdivision");
  subdivide->add_option("file", file)->required();

  auto* compress = app.add_subcommand("compress", "collapse strongly parallel classes");
  compress->add_option("file", file)->required();

  auto* derham = app.add_subcommand("derham", "product decomposition");
  derham->add_option("file", file)->required();

  auto* quotient = app.add_subcommand("quotient", "restriction quotient");
  quotient->add_option("--keep", keep_arg, "comma-separated hyperplane ids");
  quotient->add_option("file", file)->required();

  auto* trim = app.add_subcommand("trim", "remove r-shallow hyperplanes");
  trim->add_option("--radius", radius)->required();
  trim->add_option("file", file)->required();

  auto* corner = app.add_subcommand("corner", "halfspace inside a transverse corner");
  corner->add_option("file", file)->required();
  corner->add_option("h1", h1, "halfspace, e.g. a|b+")->required();
  corner->add_option("h2", h2)->required();

  auto* bend = app.add_subcommand("bend", "switch systems and crooked walls");
  bend->require_subcommand(1);
  auto* bgraph = bend->add_subcommand("graph", "switch graph report");
  bgraph->add_option("file", file)->required();
  auto* benum = bend->add_subcommand("enumerate", "crooked subtrees");
  benum->add_option("file", file)->required();
  benum->add_option("--limit", limit);
  auto* bapply = bend->add_subcommand("apply", "realize and recubulate");
  bapply->add_option("file", file)->required();
  bapply->add_option("--crooked", crooked_id)->required();
  bapply->add_flag("--keep-original-walls", keep_original);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) cmd_validate(file, opt);
    if (*dual) {
      if (pocset_path.empty() && walls_path.empty())
        throw cubecomb::ParseError("dual requires --pocset or --walls");
      cmd_dual(pocset_path, walls_path);
    }
    if (*subdivide) cmd_subdivide(file, opt);
    if (*compress) cmd_compress(file, opt);
    if (*derham) cmd_derham(file, opt);
    if (*quotient) cmd_quotient(file, keep_arg, opt);
    if (*trim) cmd_trim(file, radius, opt);
    if (*corner) cmd_corner(file, h1, h2, opt);
    if (*bgraph) cmd_bend_graph(file, opt);
    if (*benum) cmd_bend_enumerate(file, limit, opt);
    if (*bapply) cmd_bend_apply(file, crooked_id, keep_original, opt);
  } catch (const cubecomb::Error& e) {
    ordered_json j;
    j["error"] = cubecomb::errc_name(e.code());
    j["detail"] = e.detail();
    std::cout << j.dump() << "\n";
    return 1;
  } catch (const cubecomb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
