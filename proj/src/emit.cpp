#include "flopcomb/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flopcomb/errors.hpp"
#include "json.hpp"

namespace flopcomb {

namespace {

using njson = nlohmann::ordered_json;

std::string set_text(const std::vector<int>& xs) {
  std::string s = "{";
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(xs[k]);
  }
  return s + "}";
}

std::string tuple_text(const ivec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

std::string tuples_text(const std::vector<ivec>& vs) {
  std::string s;
  for (size_t k = 0; k < vs.size(); ++k) {
    if (k) s += " ";
    s += tuple_text(vs[k]);
  }
  return s;
}

std::string ints_text(const std::vector<int>& xs) {
  std::string s;
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(xs[k]);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

njson json_vecs(const std::vector<ivec>& vs) {
  njson a = njson::array();
  for (const ivec& v : vs) a.push_back(v);
  return a;
}

} // namespace

std::string dot_mutation_class(const mutation_class& mc) {
  std::string s = "digraph mutation_class {\n";
  s += "  rankdir=LR;\n";
  s += "  node [shape=box];\n";
  for (size_t k = 0; k < mc.nodes.size(); ++k)
    s += "  n" + std::to_string(k) + " [label=\"" + set_text(mc.nodes[k]) + "\"];\n";
  for (const mutation_arrow& a : mc.arrows)
    s += "  n" + std::to_string(a.from) + " -> n" + std::to_string(a.to) +
         " [label=\"" + std::to_string(a.label) + "\"];\n";
  return s + "}\n";
}

std::string json_mutation_class(const mutation_class& mc) {
  njson j;
  j["diagram"] = mc.d.name();
  j["count"] = mc.nodes.size();
  njson nodes = njson::array();
  for (const auto& n : mc.nodes) nodes.push_back(n);
  j["nodes"] = nodes;
  njson arrows = njson::array();
  for (const mutation_arrow& a : mc.arrows) {
    njson e;
    e["from"] = a.from;
    e["label"] = a.label;
    e["to"] = a.to;
    arrows.push_back(e);
  }
  j["arrows"] = arrows;
  return j.dump(2) + "\n";
}

std::string csv_mutation_class(const mutation_class& mc) {
  std::string s = "from,from_set,label,to,to_set\n";
  for (const mutation_arrow& a : mc.arrows) {
    s += std::to_string(a.from) + "," + csv_field(set_text(mc.nodes[a.from])) + "," +
         std::to_string(a.label) + "," + std::to_string(a.to) + "," +
         csv_field(set_text(mc.nodes[a.to])) + "\n";
  }
  return s;
}

namespace {

// shared pool nonpositive sets: a level bound wide enough for every chamber
// of the listing makes pairwise symmetric differences agree with
// separating_roots and inclusion agree with chamber_leq
std::vector<std::vector<ivec>> nonpositive_sets(const context& c,
                                                const std::vector<chamber>& chs) {
  std::vector<ivec> pool;
  if (!chs.empty() && chs[0].sector == 0) {
    pool = restricted_root_classes(c);
  } else {
    ivec delta = delta_restricted(c);
    std::vector<ivec> classes = restricted_root_classes(c);
    i64 pmax = 0, dmax = 0;
    for (const chamber& ch : chs)
      for (const ivec& r : chamber_ray_list(c, ch)) {
        i64 dv = dot(delta, r);
        dmax = std::max(dmax, dv < 0 ? -dv : dv);
        for (const ivec& p : classes) {
          i64 v = dot(p, r);
          pmax = std::max(pmax, v < 0 ? -v : v);
        }
      }
    pool = positive_restricted_roots(c, static_cast<int>(pmax + dmax + 1));
  }
  std::vector<std::vector<ivec>> out;
  out.reserve(chs.size());
  for (const chamber& ch : chs) {
    std::vector<ivec> rays = chamber_ray_list(c, ch);
    std::vector<ivec> ns;
    for (const ivec& rho : pool) {
      bool neg = true;
      for (const ivec& r : rays)
        if (dot(rho, r) > 0) {
          neg = false;
          break;
        }
      if (neg) ns.push_back(rho);
    }
    out.push_back(std::move(ns));
  }
  return out;
}

std::vector<ivec> symdiff(const std::vector<ivec>& a, const std::vector<ivec>& b) {
  std::vector<ivec> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

} // namespace

chamber_listing build_chamber_listing(const context& c, int sector, int box,
                                      std::size_t cap) {
  chamber_listing l;
  l.c = c;
  l.sector = sector;
  l.box = box;
  l.chambers = sector == 0 ? enumerate_sector0(c, cap)
                           : enumerate_box(c, sector, box, cap);
  std::vector<std::vector<ivec>> ns = nonpositive_sets(c, l.chambers);
  size_t n = l.chambers.size();
  l.sep_principal.reserve(n);
  for (size_t i = 0; i < n; ++i) l.sep_principal.push_back(symdiff(ns[0], ns[i]));

  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      lt[i][j] = std::includes(ns[j].begin(), ns[j].end(), ns[i].begin(), ns[i].end());
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && lt[i][k] && lt[k][j]) cover = false;
      if (cover)
        l.hasse.push_back({static_cast<int>(i), static_cast<int>(j), symdiff(ns[i], ns[j])});
    }
  return l;
}

std::string json_chambers(const chamber_listing& l) {
  njson j;
  j["diagram"] = l.c.d.name();
  j["marked"] = l.c.marked;
  j["sector"] = l.sector;
  if (l.sector != 0) j["box"] = l.box;
  j["count"] = l.chambers.size();
  njson chs = njson::array();
  for (size_t i = 0; i < l.chambers.size(); ++i) {
    const chamber& ch = l.chambers[i];
    njson e;
    e["index"] = i;
    e["path"] = ch.path;
    e["kset"] = ch.kset;
    e["labels"] = ch.labels;
    e["normals"] = json_vecs(ch.normals);
    e["rays"] = json_vecs(chamber_ray_list(l.c, ch));
    e["separating_roots"] = json_vecs(l.sep_principal[i]);
    chs.push_back(e);
  }
  j["chambers"] = chs;
  njson hs = njson::array();
  for (const hasse_edge& h : l.hasse) {
    njson e;
    e["from"] = h.from;
    e["to"] = h.to;
    e["roots"] = json_vecs(h.roots);
    hs.push_back(e);
  }
  j["hasse"] = hs;
  return j.dump(2) + "\n";
}

std::string csv_chambers(const chamber_listing& l) {
  std::string s = "index,sector,path,kset,labels,rays,normals,separating_roots,covers\n";
  for (size_t i = 0; i < l.chambers.size(); ++i) {
    const chamber& ch = l.chambers[i];
    std::vector<int> covers;
    for (const hasse_edge& h : l.hasse)
      if (h.from == static_cast<int>(i)) covers.push_back(h.to);
    s += std::to_string(i) + "," + std::to_string(l.sector) + "," +
         csv_field(ints_text(ch.path)) + "," + csv_field(ints_text(ch.kset)) + "," +
         csv_field(ints_text(ch.labels)) + "," +
         csv_field(tuples_text(chamber_ray_list(l.c, ch))) + "," +
         csv_field(tuples_text(ch.normals)) + "," +
         csv_field(tuples_text(l.sep_principal[i])) + "," +
         csv_field(ints_text(covers)) + "\n";
  }
  return s;
}

namespace {

std::string path_label(const std::vector<int>& path) {
  std::string s = "(";
  for (size_t k = 0; k < path.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(path[k]);
  }
  return s + ")";
}

} // namespace

std::string dot_chambers(const chamber_listing& l) {
  std::string s = "digraph chamber_order {\n";
  s += "  rankdir=BT;\n";
  s += "  node [shape=box];\n";
  for (size_t i = 0; i < l.chambers.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + path_label(l.chambers[i].path) + "\"];\n";
  for (const hasse_edge& h : l.hasse)
    s += "  n" + std::to_string(h.from) + " -> n" + std::to_string(h.to) +
         " [label=\"" + tuples_text(h.roots) + "\"];\n";
  return s + "}\n";
}

namespace {

struct fpt {
  double x = 0, y = 0;
};

std::string fmt2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string svg_polygon(const std::vector<fpt>& pts, const std::string& fill,
                        const std::string& title) {
  std::string s = "  <polygon points=\"";
  for (size_t k = 0; k < pts.size(); ++k) {
    if (k) s += " ";
    s += fmt2(pts[k].x) + "," + fmt2(pts[k].y);
  }
  s += "\" fill=\"" + fill + "\" stroke=\"#444444\" stroke-width=\"1.5\">";
  s += "<title>" + title + "</title></polygon>\n";
  return s;
}

// slice coordinates of a chamber: projective wall coordinates on the
// delta = +-1 slice for the open sectors, kernel basis coordinates for the
// level zero plane
std::vector<fpt> slice_polygon(const context& c, const chamber& ch) {
  std::vector<ivec> rays = chamber_ray_list(c, ch);
  std::vector<fpt> pts;
  if (ch.sector != 0) {
    std::vector<int> fw = c.finite_walls();
    for (const ivec& r : rays) {
      double s = static_cast<double>(dot(delta_restricted(c), r));
      fpt p;
      p.x = static_cast<double>(r[c.wall_index(fw[0])]) / s;
      if (fw.size() > 1) p.y = static_cast<double>(r[c.wall_index(fw[1])]) / s;
      pts.push_back(p);
    }
  } else {
    std::vector<ivec> basis = kernel_basis({delta_restricted(c)}, c.dim());
    std::vector<ivec> rows;
    for (int j = 0; j < c.dim(); ++j) {
      ivec row;
      for (const ivec& b : basis) row.push_back(b[j]);
      rows.push_back(row);
    }
    for (const ivec& r : rays) {
      qvec b;
      for (i64 x : r) b.push_back(rat(x));
      auto x = solve(rows, b, static_cast<int>(basis.size()));
      if (!x) throw invariant_error("level zero ray outside the kernel plane");
      fpt p;
      p.x = static_cast<double>((*x)[0].num) / static_cast<double>((*x)[0].den);
      if (x->size() > 1)
        p.y = static_cast<double>((*x)[1].num) / static_cast<double>((*x)[1].den);
      double len = std::sqrt(p.x * p.x + p.y * p.y);
      p.x /= len;
      p.y /= len;
      pts.push_back(p);
    }
    // wedges fan out from the origin
    pts.insert(pts.begin(), fpt{0, 0});
  }
  return pts;
}

} // namespace

std::string svg_chambers(const chamber_listing& l) {
  const context& c = l.c;
  if (c.dim() > 3)
    throw config_error("svg slice needs a restricted lattice of dimension 2 or 3");
  bool flat = c.dim() == 2; // one dimensional slice, drawn as a band
  std::vector<std::vector<fpt>> polys;
  double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
  for (const chamber& ch : l.chambers) {
    std::vector<fpt> p = slice_polygon(c, ch);
    for (const fpt& q : p) {
      xmin = std::min(xmin, q.x);
      xmax = std::max(xmax, q.x);
      ymin = std::min(ymin, q.y);
      ymax = std::max(ymax, q.y);
    }
    polys.push_back(std::move(p));
  }
  if (polys.empty()) throw invariant_error("no chambers to draw");
  double pad = 0.06 * std::max(xmax - xmin, flat ? 1.0 : ymax - ymin);
  if (pad <= 0) pad = 0.5;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  double w = 640, h = flat ? 180 : 640;
  double band_top = 50, band_bot = 130;
  auto mapx = [&](double x) { return (x - xmin) / (xmax - xmin) * (w - 40) + 20; };
  auto mapy = [&](double y) { return flat ? 0 : h - ((y - ymin) / (ymax - ymin) * (h - 40) + 20); };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(w) + "\" height=\"" +
       fmt2(h) + "\" viewBox=\"0 0 " + fmt2(w) + " " + fmt2(h) + "\">\n";
  s += "  <rect x=\"0\" y=\"0\" width=\"" + fmt2(w) + "\" height=\"" + fmt2(h) +
       "\" fill=\"#ffffff\"/>\n";
  for (size_t i = 0; i < polys.size(); ++i) {
    std::string fill = l.chambers[i].path.empty() ? "#9ecae1" : "#eeeeee";
    std::string title = "path=" + path_label(l.chambers[i].path);
    std::vector<fpt> mapped;
    if (flat) {
      // interval, or a half line through the origin at level zero
      double a = polys[i].front().x, b = polys[i].back().x;
      for (const fpt& q : polys[i]) {
        a = std::min(a, q.x);
        b = std::max(b, q.x);
      }
      if (l.sector == 0) {
        // single ray: draw from the origin towards its sign
        double dir = 0;
        for (const fpt& q : polys[i]) dir += q.x;
        a = std::min(0.0, dir);
        b = std::max(0.0, dir);
      }
      mapped = {{mapx(a), band_top}, {mapx(b), band_top}, {mapx(b), band_bot}, {mapx(a), band_bot}};
    } else {
      for (const fpt& q : polys[i]) mapped.push_back({mapx(q.x), mapy(q.y)});
    }
    s += svg_polygon(mapped, fill, title);
  }
  s += "</svg>\n";
  return s;
}

std::string json_heart(const heart_descriptor& h) {
  njson j;
  switch (h.kind) {
    case heart_kind::algebraic: j["variant"] = "algebraic"; break;
    case heart_kind::geometric_interval: j["variant"] = "geometric_interval"; break;
    case heart_kind::semi_geometric: j["variant"] = "semi_geometric"; break;
  }
  j["display"] = h.display;
  j["sector"] = h.sector;
  j["path"] = h.path;
  if (h.kind == heart_kind::algebraic) j["shift"] = h.shift;
  if (h.kind == heart_kind::semi_geometric) {
    j["contracted"] = h.contracted;
    j["components"] = h.components;
  }
  njson cone;
  cone["dim"] = h.rays.empty() ? 0 : h.rays[0].size();
  cone["rays"] = json_vecs(h.rays);
  j["cone"] = cone;
  return j.dump(2) + "\n";
}

} // namespace flopcomb
