#include "oddsign/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "oddsign/balanced.hpp"
#include "oddsign/errors.hpp"
#include "oddsign/laminar.hpp"

namespace oddsign {

namespace {

int parse_int(const std::string& tok, const std::string& where) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw DataError(where + ": expected an integer, got '" + tok + "'");
  }
}

int vertex_id(int one_based, int n, const std::string& where) {
  if (one_based < 1 || one_based > n)
    throw DataError(where + ": vertex " + std::to_string(one_based) + " outside 1.." + std::to_string(n));
  return one_based - 1;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> labels) {
  if (n < 1 || n > kMaxVertices) throw DataError("vertex count must lie in 1.." + std::to_string(kMaxVertices));
  for (auto [u, v] : edges)
    if (u == v) throw DataError("self-loop at vertex " + std::to_string(u + 1));
  bool any = false;
  for (const auto& l : labels) any |= !l.empty();
  if (!any) labels.clear();
  return Graph(n, edges, std::move(labels));
}

}  // namespace

GraphDocument parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1, lineno = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, Rational>> weights;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c' || tag[0] == '#') continue;
    std::string where = "line " + std::to_string(lineno);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (tag == "p") {
      if (n >= 0) throw DataError(where + ": second header");
      if (toks.size() != 2) throw DataError(where + ": header must be 'p <n> <m>'");
      n = parse_int(toks[0], where);
      m = parse_int(toks[1], where);
      if (n < 1 || n > kMaxVertices) throw DataError(where + ": vertex count must lie in 1.." + std::to_string(kMaxVertices));
      labels.assign(n, "");
      continue;
    }
    if (n < 0) throw DataError(where + ": '" + tag + "' before the 'p' header");
    if (tag == "e") {
      if (toks.size() != 2) throw DataError(where + ": edge must be 'e <u> <v>'");
      int u = vertex_id(parse_int(toks[0], where), n, where), v = vertex_id(parse_int(toks[1], where), n, where);
      if (u == v) throw DataError(where + ": self-loop");
      edges.emplace_back(u, v);
    } else if (tag == "w") {
      if (toks.size() != 2) throw DataError(where + ": weight must be 'w <u> <p/q>'");
      weights.emplace_back(vertex_id(parse_int(toks[0], where), n, where), parse_rational(toks[1]));
    } else if (tag == "v") {
      if (toks.size() != 2) throw DataError(where + ": label must be 'v <u> <label>'");
      labels[vertex_id(parse_int(toks[0], where), n, where)] = toks[1];
    } else {
      throw DataError(where + ": unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw DataError("missing 'p <n> <m>' header");
  GraphDocument doc{make_graph(n, edges, labels), std::nullopt};
  if (static_cast<int>(doc.g.size()) != m || static_cast<int>(edges.size()) != m)
    throw DataError("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()) +
                    " lines and " + std::to_string(doc.g.size()) + " distinct edges");
  if (!weights.empty()) {
    WeightAssignment w(n, doc.g.vertices());
    for (auto& [v, r] : weights) w.set(v, r);
    doc.w = w;
  }
  return doc;
}

std::string emit_edge_list(const GraphDocument& doc) {
  std::ostringstream out;
  const Graph& g = doc.g;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (int v = 0; v < g.order(); ++v)
    if (!g.labels().empty() && !g.labels()[v].empty()) out << "v " << v + 1 << ' ' << g.labels()[v] << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (doc.w)
    for (int v : doc.w->domain()) out << "w " << v + 1 << ' ' << format_rational((*doc.w)[v]) << '\n';
  return out.str();
}

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

VertexSet parse_vertex_list(const Json& j, int n) {
  if (!j.is_array()) throw DataError("vertex list must be an array");
  VertexSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DataError("vertex ids must be integers");
    s.insert(vertex_id(x.get<int>(), n, "vertex list"));
  }
  return s;
}

Json weights_to_json(const WeightAssignment& w) {
  Json out = Json::object();
  for (int v : w.domain()) out[std::to_string(v + 1)] = format_rational(w[v]);
  return out;
}

WeightAssignment weights_from_json(const Json& j, int n) {
  if (!j.is_object()) throw DataError("weights must be an object of \"vertex\": \"p/q\"");
  VertexSet domain;
  std::vector<std::pair<int, Rational>> entries;
  for (const auto& [key, value] : j.items()) {
    int v = vertex_id(parse_int(key, "weights"), n, "weights");
    if (!value.is_string()) throw DataError("weights must be \"p/q\" strings");
    entries.emplace_back(v, parse_rational(value.get<std::string>()));
    domain.insert(v);
  }
  WeightAssignment w(n, domain);
  for (auto& [v, r] : entries) w.set(v, r);
  return w;
}

GraphDocument parse_graph_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw DataError("graph object needs 'n' and 'edges'");
    int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxVertices) throw DataError("vertex count must lie in 1.." + std::to_string(kMaxVertices));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DataError("each edge must be a pair");
      edges.emplace_back(vertex_id(e[0].get<int>(), n, "edges"), vertex_id(e[1].get<int>(), n, "edges"));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
      if (static_cast<int>(labels.size()) != n) throw DataError("labels must list one entry per vertex");
    }
    GraphDocument doc{make_graph(n, edges, labels), std::nullopt};
    if (j.contains("weights")) {
      WeightAssignment w = weights_from_json(j.at("weights"), n);
      WeightAssignment full(n, doc.g.vertices());
      for (int v : w.domain()) full.set(v, w[v]);
      doc.w = full;
    }
    return doc;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed graph object: ") + e.what());
  }
}

Json graph_to_json(const GraphDocument& doc) {
  Json j;
  j["n"] = doc.g.order();
  Json edges = Json::array();
  for (auto [u, v] : doc.g.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = edges;
  if (!doc.g.labels().empty()) j["labels"] = doc.g.labels();
  if (doc.w) j["weights"] = weights_to_json(*doc.w);
  return j;
}

GraphDocument parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DataError("input is not valid JSON");
    if (j.contains("graph")) return parse_graph_json(j.at("graph"));
    return parse_graph_json(j);
  }
  return parse_edge_list(text);
}

std::string emit_graph(const GraphDocument& doc, GraphFormat format) {
  if (format == GraphFormat::json) return graph_to_json(doc).dump(2) + "\n";
  return emit_edge_list(doc);
}

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ExitCode::no_input, "cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

GraphDocument read_graph(const std::string& path) { return parse_graph(read_text(path)); }

namespace {

Json separation_json(const Separation& s) {
  Json j{{"a", vertex_list(s.a)}, {"c", vertex_list(s.c)}, {"b", vertex_list(s.b)}};
  if (s.center) j["center"] = vertex_list(*s.center);
  return j;
}

Json centers_json(const std::vector<int>& cs) {
  Json out = Json::array();
  for (int v : cs) out.push_back(v + 1);
  return out;
}

std::vector<int> parse_centers(const Json& j, int n) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(vertex_id(x.get<int>(), n, "centers"));
  return out;
}

}  // namespace

Json certificate_document(const GraphDocument& doc, const Rational& c, int d, const PipelineResult& r,
                          const RunMetadata& meta) {
  Json j;
  j["format"] = "oddsign-certificate";
  j["version"] = 1;
  j["meta"] = {{"seed", meta.seed},
               {"mode", meta.mode},
               {"work_budget", meta.work_budget},
               {"treewidth_cap", meta.treewidth_cap},
               {"parameters", meta.parameters}};
  GraphDocument plain{doc.g, doc.weights()};
  j["graph"] = graph_to_json(plain);
  j["c"] = format_rational(c);
  j["d"] = d;
  j["status"] = to_string(r.status);
  j["route"] = r.route;
  j["source_level"] = r.source_level;
  if (!r.failure.empty()) j["failure"] = r.failure;
  Json levels = Json::array();
  for (const auto& l : r.trace.levels)
    levels.push_back({{"bag", vertex_list(l.bag)}, {"d", l.d}, {"weights", weights_to_json(l.w)}});
  j["levels"] = levels;
  Json stages = Json::array();
  for (const auto& s : r.trace.stages) {
    Json st{{"kind", to_string(s.kind)}, {"from_level", s.from_level}, {"to_level", s.to_level}, {"note", s.note}};
    Json coll = Json::array();
    for (const auto& sep : s.collection) coll.push_back(separation_json(sep));
    st["collection"] = coll;
    st["anchors"] = centers_json(s.anchors);
    if (s.clique_size) st["clique_size"] = s.clique_size;
    if (s.forcer_class >= 0) {
      st["forcer_class"] = s.forcer_class;
      st["active_forcers"] = s.active_forcers;
    }
    stages.push_back(st);
  }
  j["stages"] = stages;
  Json lifts = Json::array();
  for (const auto& l : r.trace.lifts)
    lifts.push_back({{"from_level", l.from_level},
                     {"y", vertex_list(l.y)},
                     {"lifted", vertex_list(l.lifted)},
                     {"centers", centers_json(l.centers)},
                     {"verified", l.verified}});
  j["lifts"] = lifts;
  if (r.trace.terminal) {
    const auto& t = *r.trace.terminal;
    j["terminal"] = {{"no_strong_forcer", t.no_strong_forcer},
                     {"no_terminal_twin", t.no_terminal_twin},
                     {"no_clique_cutset", t.no_clique_cutset},
                     {"no_star_cutset", t.no_star_cutset},
                     {"rescued", t.rescued},
                     {"td_exact", r.trace.terminal_td_exact},
                     {"width", r.trace.terminal_width}};
  }
  if (r.certificate) {
    const auto& cert = *r.certificate;
    Json comps = Json::array(), ws = Json::array();
    for (VertexSet comp : cert.components) comps.push_back(vertex_list(comp));
    for (const auto& w : cert.weights) ws.push_back(format_rational(w));
    j["certificate"] = {{"y", vertex_list(cert.y)},
                        {"lifted", vertex_list(cert.lifted)},
                        {"centers", centers_json(cert.centers)},
                        {"c", format_rational(cert.c)},
                        {"d", cert.d},
                        {"components", comps},
                        {"weights", ws}};
  }
  return j;
}

VerifyReport verify_certificate_document(const Json& doc) {
  VerifyReport rep;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back(VerifyCheck{std::move(name), pass, std::move(detail)});
    return pass;
  };
  try {
    if (!check("format", doc.value("format", "") == "oddsign-certificate")) return rep;
    rep.status = doc.at("status").get<std::string>();
    GraphDocument gd = parse_graph_json(doc.at("graph"));
    const Graph& g = gd.g;
    int n = g.order();
    Rational c = parse_rational(doc.at("c").get<std::string>());
    int d = doc.at("d").get<int>();

    struct L {
      VertexSet bag;
      int d;
      WeightAssignment w;
    };
    std::vector<L> levels;
    for (const auto& lj : doc.at("levels")) {
      VertexSet bag = parse_vertex_list(lj.at("bag"), n);
      levels.push_back(L{bag, lj.at("d").get<int>(), weights_from_json(lj.at("weights"), n)});
    }
    if (!check("levels present", !levels.empty())) return rep;
    check("level 0 is the input", levels[0].bag == g.vertices() && levels[0].d == d);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      std::string tag = "level " + std::to_string(i);
      check(tag + " weights total 1", levels[i].w.total() == 1, format_rational(levels[i].w.total()));
      check(tag + " weight domain is the bag", levels[i].w.domain() == levels[i].bag);
      if (i > 0) check(tag + " bag inside its parent", levels[i].bag.subset_of(levels[i - 1].bag));
    }
    for (int v : g.vertices())
      if (levels[0].w[v] != (*gd.w)[v]) {
        check("level 0 weights match the input", false, "vertex " + std::to_string(v + 1));
        break;
      }

    for (const auto& lj : doc.at("lifts")) {
      int from = lj.at("from_level").get<int>();
      std::string tag = "lift from level " + std::to_string(from);
      if (!check(tag + " refers to a level", from >= 1 && from < static_cast<int>(levels.size()))) continue;
      VertexSet y = parse_vertex_list(lj.at("y"), n);
      VertexSet lifted = parse_vertex_list(lj.at("lifted"), n);
      const L& parent = levels[from - 1];
      check(tag + " is the radius-2 ball", lifted == lift_separator(g, parent.bag, levels[from].bag, y));
      auto audit = verify_balanced_separator(g, parent.bag, parent.w, lifted, c, parent.d,
                                             parse_centers(lj.at("centers"), n));
      check(tag + " balanced and bounded", audit.ok);
    }

    if (doc.contains("certificate")) {
      const Json& cj = doc.at("certificate");
      VertexSet y = parse_vertex_list(cj.at("y"), n);
      Rational cc = parse_rational(cj.at("c").get<std::string>());
      int cd = cj.at("d").get<int>();
      check("certificate parameters match the run", cc == c && cd == d);
      if (cj.contains("lifted")) {
        VertexSet lifted = parse_vertex_list(cj.at("lifted"), n);
        check("separator inside the lifted set", y.subset_of(lifted));
        const auto& lifts = doc.at("lifts");
        if (!lifts.empty()) check("lifted set ends the lift chain", lifted == parse_vertex_list(lifts.back().at("lifted"), n));
      }
      auto audit = verify_balanced_separator(g, g.vertices(), levels[0].w, y, c, d, parse_centers(cj.at("centers"), n));
      check("final separator balanced", audit.inside && audit.balanced);
      check("final separator bounded", audit.bounded);
      std::vector<VertexSet> comps;
      for (const auto& x : cj.at("components")) comps.push_back(parse_vertex_list(x, n));
      check("recorded components match", comps == audit.components);
      std::vector<Rational> ws;
      for (const auto& x : cj.at("weights")) ws.push_back(parse_rational(x.get<std::string>()));
      check("recorded component weights match", ws == audit.weights);
    } else {
      check("status without certificate is not 'certified'", rep.status != "certified");
    }
  } catch (const Json::exception& e) {
    check("document structure", false, e.what());
  } catch (const Error& e) {
    check("document content", false, e.what());
  }
  rep.ok = !rep.checks.empty();
  for (const auto& ch : rep.checks) rep.ok &= ch.pass;
  return rep;
}

Json membership_to_json(const MembershipResult& m) {
  Json j{{"member", m.member()}, {"outcome", to_string(m.outcome)}, {"violation", to_string(m.violation)}};
  if (m.c4) j["c4"] = vertex_list(*m.c4);
  if (m.config) {
    Json paths = Json::array();
    for (const auto& p : m.config->paths) paths.push_back(centers_json(p.vertices));
    j["configuration"] = {{"kind", to_string(m.config->kind)}, {"frame", centers_json(m.config->frame)}, {"paths", paths}};
  }
  if (m.wheel)
    j["wheel"] = {{"hole", centers_json(m.wheel->hole.cycle)}, {"hub", m.wheel->hub + 1}, {"spokes", vertex_list(m.wheel->spokes)}};
  return j;
}

Json forcer_to_json(const ForcerRecord& f, const CutsetCertificate& cert) {
  Json j{{"kind", to_string(f.kind)}, {"hole", centers_json(f.hole.cycle)}, {"center", vertex_list(f.center)},
         {"strong", f.strong()}};
  if (f.hub >= 0) j["hub"] = f.hub + 1;
  if (f.clone >= 0) j["clone"] = f.clone + 1;
  if (f.y >= 0) j["y"] = f.y + 1;
  if (f.universal) j["universal"] = true;
  j["cutset"] = {{"cutset", vertex_list(cert.cutset)}, {"side_a", vertex_list(cert.side_a)},
                 {"side_b", vertex_list(cert.side_b)}, {"rule", cert.rule}};
  return j;
}

std::vector<Separation> separations_from_json(const Json& j, int n) {
  if (!j.is_array()) throw DataError("separations must be an array");
  std::vector<Separation> out;
  try {
    for (const auto& s : j) {
      Separation sep{parse_vertex_list(s.at("a"), n), parse_vertex_list(s.at("c"), n), parse_vertex_list(s.at("b"), n),
                     std::nullopt};
      if (s.contains("center")) sep.center = parse_vertex_list(s.at("center"), n);
      out.push_back(sep);
    }
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed separation: ") + e.what());
  }
  return out;
}

Json tree_decomposition_to_json(const TreeDecomposition& td) {
  Json bags = Json::array(), edges = Json::array();
  for (VertexSet b : td.bags) bags.push_back(vertex_list(b));
  for (auto [a, b] : td.edges) edges.push_back({a + 1, b + 1});
  return Json{{"width", td.width()}, {"bags", bags}, {"edges", edges}};
}

Json twojoin_split_to_json(const TwoJoinSplit& s) {
  return Json{{"x1", vertex_list(s.x1)}, {"x2", vertex_list(s.x2)}, {"a1", vertex_list(s.a1)},
              {"b1", vertex_list(s.b1)}, {"a2", vertex_list(s.a2)}, {"b2", vertex_list(s.b2)}};
}

Json twojoin_tree_to_json(const TwoJoinTree& t) {
  Json nodes = Json::array();
  for (const auto& node : t.nodes) {
    Json nj{{"order", node.g.order()}, {"parent", node.parent}, {"depth", node.depth}, {"tag", to_string(node.tag.kind)}};
    if (node.children[0] >= 0) nj["children"] = {node.children[0], node.children[1]};
    if (node.split) nj["split"] = twojoin_split_to_json(*node.split);
    Json paths = Json::array();
    for (const auto& p : node.flat_paths) paths.push_back(centers_json(p));
    nj["flat_paths"] = paths;
    GraphDocument gd{node.g, std::nullopt};
    nj["graph"] = graph_to_json(gd);
    nodes.push_back(nj);
  }
  return Json{{"depth", t.depth()}, {"leaves", t.leaves()}, {"nodes", nodes}};
}

}  // namespace oddsign
