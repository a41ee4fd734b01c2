#include "flopcomb/rootlat.hpp"

#include <algorithm>
#include <set>

#include "flopcomb/errors.hpp"

namespace flopcomb {

bool context::is_wall(int v) const {
  return std::binary_search(walls.begin(), walls.end(), v);
}

int context::wall_index(int v) const {
  auto it = std::lower_bound(walls.begin(), walls.end(), v);
  if (it == walls.end() || *it != v) throw invariant_error("vertex is not a wall");
  return static_cast<int>(it - walls.begin());
}

std::vector<int> context::finite_walls() const {
  std::vector<int> out;
  for (int w : walls)
    if (w != 0) out.push_back(w);
  return out;
}

context make_context(diagram d, std::vector<int> marked) {
  if (!d.affine) throw config_error("context needs an affine diagram");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  for (int m : marked)
    if (!d.has_vertex(m)) throw config_error("marked vertex not in diagram");
  std::vector<int> walls;
  std::set_difference(d.vertices.begin(), d.vertices.end(), marked.begin(),
                      marked.end(), std::back_inserter(walls));
  if (walls.size() < 2) throw config_error("marked set leaves fewer than two walls");
  return context{std::move(d), std::move(marked), std::move(walls)};
}

context make_context(const std::string& diagram_name, std::vector<int> marked) {
  return make_context(parse_diagram(diagram_name), std::move(marked));
}

ivec simple_root(const diagram& d, int i) {
  ivec v(d.n_vertices(), 0);
  v[d.index_of(i)] = 1;
  return v;
}

ivec delta_vec(const diagram& d) {
  ivec v(d.n_vertices(), 0);
  for (int u : d.vertices) v[d.index_of(u)] = d.kac[u];
  return v;
}

ivec simple_reflection(const diagram& d, int i, const ivec& v) {
  // s_i(v) = v - <row i of cartan, v> alpha_i
  int pi = d.index_of(i);
  i64 c = 0;
  for (int j = 0; j < d.n_vertices(); ++j)
    c = ck_add(c, ck_mul(d.cartan.at(pi, j), v[j]));
  ivec out = v;
  out[pi] = ck_sub(out[pi], c);
  return out;
}

imat reflection_matrix(const diagram& d, int i) {
  int n = d.n_vertices();
  int pi = d.index_of(i);
  imat m = imat::identity(n);
  for (int j = 0; j < n; ++j)
    m.at(pi, j) = ck_sub(m.at(pi, j), d.cartan.at(pi, j));
  return m;
}

imat word_matrix(const diagram& d, const std::vector<int>& word) {
  imat m = imat::identity(d.n_vertices());
  for (int i : word) m = m * reflection_matrix(d, i);
  return m;
}

ivec apply_word(const diagram& d, const std::vector<int>& word, ivec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = simple_reflection(d, *it, v);
  return v;
}

namespace {

bool positive_vec(const ivec& v) {
  bool nonzero = false;
  for (i64 x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

// positive roots of the parabolic subsystem on J (J a proper vertex subset,
// hence finite type)
std::vector<ivec> parabolic_positive_roots(const diagram& d, const std::vector<int>& J) {
  std::set<ivec> seen;
  std::vector<ivec> queue;
  for (int j : J) {
    ivec a = simple_root(d, j);
    if (seen.insert(a).second) queue.push_back(a);
  }
  for (size_t h = 0; h < queue.size(); ++h) {
    ivec v = queue[h];
    for (int j : J) {
      ivec w = simple_reflection(d, j, v);
      if (positive_vec(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return std::vector<ivec>(seen.begin(), seen.end());
}

} // namespace

bool is_positive_root_vec(const ivec& v) { return positive_vec(v); }

weyl_element longest_element_word(const diagram& d, const std::vector<int>& J) {
  std::vector<int> Js(J);
  std::sort(Js.begin(), Js.end());
  Js.erase(std::unique(Js.begin(), Js.end()), Js.end());
  for (int j : Js)
    if (!d.has_vertex(j)) throw config_error("longest element: vertex not in diagram");
  if (Js.size() == d.vertices.size())
    throw config_error("longest element: subset must be proper");

  size_t npos = parabolic_positive_roots(d, Js).size();
  weyl_element w{imat::identity(d.n_vertices()), {}};
  for (size_t step = 0; step <= npos; ++step) {
    int pick = -1;
    for (int j : Js) {
      ivec img = w.m.apply(simple_root(d, j));
      if (positive_vec(img)) {
        pick = j;
        break;
      }
    }
    if (pick < 0) break;
    w.m = w.m * reflection_matrix(d, pick);
    w.word.push_back(pick);
  }
  if (w.word.size() != npos)
    throw invariant_error("longest element length does not match root count");
  return w;
}

std::vector<int> subgraph_involution(const diagram& d, const std::vector<int>& J) {
  int maxid = d.vertices.empty() ? 0 : d.vertices.back();
  std::vector<int> inv(maxid + 1, -1);
  std::vector<int> Js(J);
  std::sort(Js.begin(), Js.end());
  Js.erase(std::unique(Js.begin(), Js.end()), Js.end());
  if (Js.size() == d.vertices.size()) {
    // affine group has no longest element; use the identity convention
    for (int j : Js) inv[j] = j;
    return inv;
  }
  weyl_element w = longest_element_word(d, Js);
  for (int p : Js) {
    ivec img = w.m.apply(simple_root(d, p));
    int q = -1;
    for (int u : Js) {
      ivec target = simple_root(d, u);
      for (i64& x : target) x = ck_neg(x);
      if (img == target) {
        q = u;
        break;
      }
    }
    if (q < 0) throw invariant_error("longest element does not permute simple roots");
    inv[p] = q;
  }
  return inv;
}

std::vector<ivec> finite_positive_roots(const diagram& d) {
  if (!d.affine) throw config_error("finite positive roots: diagram must be affine");
  std::vector<int> fin;
  for (int v : d.vertices)
    if (v != 0) fin.push_back(v);
  return parabolic_positive_roots(d, fin);
}

std::vector<ivec> enumerate_real_roots(const diagram& d, int level_bound) {
  if (level_bound < 0) throw config_error("negative level bound");
  ivec delta = delta_vec(d);
  std::vector<ivec> base = finite_positive_roots(d);
  {
    std::vector<ivec> mirrored;
    for (const ivec& b : base) mirrored.push_back(vsub(delta, b));
    base.insert(base.end(), mirrored.begin(), mirrored.end());
  }
  std::vector<ivec> out;
  for (int k = 0; k <= level_bound; ++k) {
    for (const ivec& b : base) {
      ivec v = b;
      for (int t = 0; t < k; ++t) v = vadd(v, delta);
      out.push_back(v);
      out.push_back(vneg(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ivec restrict_vec(const context& c, const ivec& full) {
  if (static_cast<int>(full.size()) != c.full_dim())
    throw invariant_error("restrict: dimension mismatch");
  ivec out(c.dim(), 0);
  for (int k = 0; k < c.dim(); ++k) out[k] = full[c.d.index_of(c.walls[k])];
  return out;
}

ivec lift_vec(const context& c, const ivec& restricted) {
  if (static_cast<int>(restricted.size()) != c.dim())
    throw invariant_error("lift: dimension mismatch");
  ivec out(c.full_dim(), 0);
  for (int k = 0; k < c.dim(); ++k) out[c.d.index_of(c.walls[k])] = restricted[k];
  return out;
}

ivec delta_restricted(const context& c) { return restrict_vec(c, delta_vec(c.d)); }

ivec wall_simple(const context& c, int wall_vertex) {
  ivec v(c.dim(), 0);
  v[c.wall_index(wall_vertex)] = 1;
  return v;
}

std::vector<ivec> restricted_root_classes(const context& c) {
  std::set<ivec> seen;
  for (const ivec& b : finite_positive_roots(c.d)) {
    ivec p = restrict_vec(c, b);
    if (!is_zero(p)) seen.insert(p);
  }
  return std::vector<ivec>(seen.begin(), seen.end());
}

std::vector<ivec> positive_restricted_roots(const context& c, int level_bound) {
  if (level_bound < 0) throw config_error("negative level bound");
  ivec delta = delta_vec(c.d);
  std::vector<ivec> base = finite_positive_roots(c.d);
  {
    std::vector<ivec> mirrored;
    for (const ivec& b : base) mirrored.push_back(vsub(delta, b));
    base.insert(base.end(), mirrored.begin(), mirrored.end());
  }
  std::set<ivec> seen;
  for (int k = 0; k <= level_bound; ++k) {
    for (const ivec& b : base) {
      ivec v = b;
      for (int t = 0; t < k; ++t) v = vadd(v, delta);
      ivec p = restrict_vec(c, v);
      if (!is_zero(p)) seen.insert(p);
    }
  }
  return std::vector<ivec>(seen.begin(), seen.end());
}

linear_map phi_map(const context& c, int i) {
  if (!c.d.has_vertex(i)) throw config_error("phi: vertex not in diagram");
  if (std::binary_search(c.marked.begin(), c.marked.end(), i))
    throw config_error("phi: vertex already marked");

  std::vector<int> Jp = c.marked;
  Jp.insert(std::lower_bound(Jp.begin(), Jp.end(), i), i);
  if (Jp.size() == c.d.vertices.size())
    throw config_error("phi: no wall left after marking");

  std::vector<int> inv = subgraph_involution(c.d, Jp);
  int iota = inv[i];
  std::vector<int> src_marked = Jp;
  src_marked.erase(std::find(src_marked.begin(), src_marked.end(), iota));
  context src = make_context(c.d, src_marked);

  imat full = longest_element_word(c.d, c.marked).m * longest_element_word(c.d, Jp).m;

  // the map must send the span of the source marked simples into the span of
  // the target marked simples, i.e. vanish on them after restriction
  for (int k : src.marked) {
    ivec img = restrict_vec(c, full.apply(simple_root(c.d, k)));
    if (!is_zero(img)) throw invariant_error("phi map not well defined on quotient");
  }

  imat m(c.dim(), src.dim());
  for (int k = 0; k < src.dim(); ++k) {
    ivec img = restrict_vec(c, full.apply(simple_root(c.d, src.walls[k])));
    for (int r = 0; r < c.dim(); ++r) m.at(r, k) = img[r];
  }
  return linear_map{src.walls, c.walls, std::move(m)};
}

linear_map phi_path(const context& c, const std::vector<int>& steps) {
  context cur = c;
  imat total = imat::identity(c.dim());
  std::vector<int> src_walls = c.walls;
  for (int step : steps) {
    linear_map lm = phi_map(cur, step);
    total = total * lm.m;
    src_walls = lm.source_walls;
    std::vector<int> next_marked;
    std::set_difference(cur.d.vertices.begin(), cur.d.vertices.end(),
                        src_walls.begin(), src_walls.end(),
                        std::back_inserter(next_marked));
    cur = make_context(cur.d, std::move(next_marked));
  }
  return linear_map{std::move(src_walls), c.walls, std::move(total)};
}

qvec delta_star(const context& c, const std::vector<ivec>& model_basis) {
  int n = c.dim();
  if (static_cast<int>(model_basis.size()) != n - 1)
    throw config_error("delta functional: basis must have dimension minus one vectors");
  std::vector<ivec> rows;
  rows.push_back(delta_restricted(c));
  for (const ivec& b : model_basis) {
    if (static_cast<int>(b.size()) != n)
      throw config_error("delta functional: basis vector has wrong dimension");
    rows.push_back(b);
  }
  if (rank_of(rows, n) != n) throw config_error("delta functional: degenerate basis");
  qvec rhs(n, rat(0));
  rhs[0] = rat(1);
  auto sol = solve(rows, rhs, n);
  if (!sol) throw invariant_error("delta functional: solve failed on full rank system");
  return *sol;
}

} // namespace flopcomb
