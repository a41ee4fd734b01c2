#include "flopcomb/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "flopcomb/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flopcomb {

namespace {

ivec proj_normal(const context& c, const imat& w, int vertex) {
  return restrict_vec(c, w.apply(simple_root(c.d, vertex)));
}

std::vector<int> sector_labels(const context& c, const std::vector<int>& kset, int sector) {
  std::vector<int> out;
  for (int v : c.d.vertices) {
    if (std::binary_search(kset.begin(), kset.end(), v)) continue;
    if (sector == 0 && v == 0) continue;
    out.push_back(v);
  }
  return out;
}

void fill_normals(const context& c, chamber& ch) {
  ch.normals.clear();
  for (int l : ch.labels) {
    ivec n = proj_normal(c, ch.weyl, l);
    if (ch.sector == -1) n = vneg(n);
    ch.normals.push_back(n);
  }
}

hcone box_cone(const context& c, int sector, int box) {
  hcone h;
  h.dim = c.dim();
  ivec nd = vscale(static_cast<i64>(box) * sector, delta_restricted(c));
  for (int i : c.finite_walls()) {
    ivec e(c.dim(), 0);
    e[c.wall_index(i)] = 1;
    h.ineqs.push_back(vadd(nd, e));
    h.ineqs.push_back(vsub(nd, e));
  }
  return h;
}

bool meets_open_box(const context& c, const chamber& ch, const hcone& boxc) {
  hcone h = chamber_bounds(c, ch);
  h.ineqs.insert(h.ineqs.end(), boxc.ineqs.begin(), boxc.ineqs.end());
  return gens_dimension(dd_hull(h)) == c.dim();
}

} // namespace

chamber principal_chamber(const context& c, int sector) {
  if (sector != 1 && sector != -1 && sector != 0)
    throw config_error("sector must be +1, -1 or 0");
  chamber ch;
  ch.sector = sector;
  ch.weyl = imat::identity(c.full_dim());
  ch.kset = c.marked;
  ch.labels = sector_labels(c, ch.kset, sector);
  fill_normals(c, ch);
  return ch;
}

chamber wall_cross(const context& c, const chamber& ch, int label) {
  if (std::find(ch.labels.begin(), ch.labels.end(), label) == ch.labels.end())
    throw config_error("label is not a wall of this chamber");
  std::vector<int> kplus = ch.kset;
  kplus.insert(std::lower_bound(kplus.begin(), kplus.end(), label), label);

  chamber out;
  out.sector = ch.sector;
  out.weyl = ch.weyl * longest_element_word(c.d, ch.kset).m *
             longest_element_word(c.d, kplus).m;
  out.kset = mutate(c.d, ch.kset, label);
  out.labels = sector_labels(c, out.kset, ch.sector);
  fill_normals(c, out);
  out.path = ch.path;
  out.path.push_back(label);

  // the crossed hyperplane must reappear under the partner label with the
  // opposite inward normal
  int part = iota(c.d, ch.kset, label);
  auto it = std::find(out.labels.begin(), out.labels.end(), part);
  if (it != out.labels.end()) {
    size_t old_at = std::find(ch.labels.begin(), ch.labels.end(), label) - ch.labels.begin();
    size_t new_at = it - out.labels.begin();
    if (out.normals[new_at] != vneg(ch.normals[old_at]))
      throw invariant_error("wall crossing lost the shared wall");
  }
  return out;
}

std::vector<i64> chamber_key(const chamber& ch) {
  std::vector<ivec> ns;
  for (const ivec& n : ch.normals) ns.push_back(primitive(n));
  std::sort(ns.begin(), ns.end());
  std::vector<i64> key;
  key.push_back(ch.sector);
  for (const ivec& n : ns) key.insert(key.end(), n.begin(), n.end());
  return key;
}

hcone chamber_bounds(const context& c, const chamber& ch) {
  hcone h;
  h.dim = c.dim();
  if (ch.sector == 0) h.eqs.push_back(delta_restricted(c));
  h.ineqs = ch.normals;
  return h;
}

std::vector<ivec> chamber_ray_list(const context& c, const chamber& ch) {
  std::vector<ivec> rays;
  for (size_t k = 0; k < ch.labels.size(); ++k) {
    std::vector<ivec> rows;
    if (ch.sector == 0) rows.push_back(delta_restricted(c));
    for (size_t j = 0; j < ch.labels.size(); ++j)
      if (j != k) rows.push_back(ch.normals[j]);
    std::vector<ivec> ker = kernel_basis(rows, c.dim());
    if (ker.size() != 1) throw invariant_error("chamber is not simplicial");
    ivec r = ker[0];
    i64 s = dot(ch.normals[k], r);
    if (s == 0) throw invariant_error("degenerate chamber ray");
    if (s < 0) r = vneg(r);
    rays.push_back(r);
  }
  return rays;
}

hcone face_bounds(const context& c, const chamber& ch, const std::vector<int>& tight) {
  hcone h = chamber_bounds(c, ch);
  for (int t : tight) {
    auto it = std::find(ch.labels.begin(), ch.labels.end(), t);
    if (it == ch.labels.end()) throw config_error("tight label is not a wall");
    h.eqs.push_back(ch.normals[it - ch.labels.begin()]);
  }
  return h;
}

std::vector<ivec> face_ray_list(const context& c, const chamber& ch,
                                const std::vector<int>& tight) {
  std::vector<ivec> rays = chamber_ray_list(c, ch);
  std::vector<ivec> out;
  for (size_t k = 0; k < ch.labels.size(); ++k) {
    if (std::find(tight.begin(), tight.end(), ch.labels[k]) != tight.end()) continue;
    out.push_back(rays[k]);
  }
  return out;
}

namespace {

struct bfs_maps {
  std::map<std::vector<i64>, char> seen; // 1 kept, 0 rejected
};

std::vector<chamber> bfs_serial(const context& c, int sector, const hcone* boxc,
                                std::size_t cap) {
  std::vector<chamber> out;
  bfs_maps m;
  chamber p = principal_chamber(c, sector);
  if (boxc && !meets_open_box(c, p, *boxc))
    throw invariant_error("principal chamber misses the box");
  m.seen[chamber_key(p)] = 1;
  out.push_back(std::move(p));
  for (size_t head = 0; head < out.size(); ++head) {
    chamber cur = out[head];
    for (int l : cur.labels) {
      chamber nb = wall_cross(c, cur, l);
      std::vector<i64> key = chamber_key(nb);
      if (m.seen.count(key)) continue;
      bool keep = !boxc || meets_open_box(c, nb, *boxc);
      m.seen[key] = keep ? 1 : 0;
      if (!keep) continue;
      if (out.size() + 1 > cap) throw resource_cap_error("chamber count exceeds cap");
      out.push_back(std::move(nb));
    }
  }
  return out;
}

#ifdef _OPENMP
// level synchronous variant; the ordered merge reproduces the serial
// first-discovery order exactly
std::vector<chamber> bfs_parallel(const context& c, int sector, const hcone* boxc,
                                  std::size_t cap) {
  std::vector<chamber> out;
  bfs_maps m;
  chamber p = principal_chamber(c, sector);
  if (boxc && !meets_open_box(c, p, *boxc))
    throw invariant_error("principal chamber misses the box");
  m.seen[chamber_key(p)] = 1;
  out.push_back(std::move(p));

  std::vector<size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::pair<size_t, int>> tasks;
    for (size_t idx : frontier)
      for (int l : out[idx].labels) tasks.emplace_back(idx, l);

    struct result {
      chamber nb;
      std::vector<i64> key;
      bool keep = false;
      bool fresh = false;
    };
    std::vector<result> results(tasks.size());
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
      try {
        result& r = results[t];
        r.nb = wall_cross(c, out[tasks[t].first], tasks[t].second);
        r.key = chamber_key(r.nb);
        if (!m.seen.count(r.key)) {
          r.fresh = true;
          r.keep = !boxc || meets_open_box(c, r.nb, *boxc);
        }
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);

    std::vector<size_t> next;
    for (result& r : results) {
      if (!r.fresh || m.seen.count(r.key)) continue;
      m.seen[r.key] = r.keep ? 1 : 0;
      if (!r.keep) continue;
      if (out.size() + 1 > cap) throw resource_cap_error("chamber count exceeds cap");
      next.push_back(out.size());
      out.push_back(std::move(r.nb));
    }
    frontier = std::move(next);
  }
  return out;
}
#endif

} // namespace

std::vector<chamber> enumerate_box_serial(const context& c, int sector, int box,
                                          std::size_t cap) {
  if (sector == 0) return enumerate_sector0_serial(c, cap);
  if (box < 1) throw config_error("box must be at least 1");
  hcone boxc = box_cone(c, sector, box);
  return bfs_serial(c, sector, &boxc, cap);
}

std::vector<chamber> enumerate_box(const context& c, int sector, int box, std::size_t cap) {
#ifdef _OPENMP
  if (sector == 0) return enumerate_sector0(c, cap);
  if (box < 1) throw config_error("box must be at least 1");
  hcone boxc = box_cone(c, sector, box);
  return bfs_parallel(c, sector, &boxc, cap);
#else
  return enumerate_box_serial(c, sector, box, cap);
#endif
}

std::vector<chamber> enumerate_sector0_serial(const context& c, std::size_t cap) {
  return bfs_serial(c, 0, nullptr, cap);
}

std::vector<chamber> enumerate_sector0(const context& c, std::size_t cap) {
#ifdef _OPENMP
  return bfs_parallel(c, 0, nullptr, cap);
#else
  return enumerate_sector0_serial(c, cap);
#endif
}

cone_ref locate(const context& c, const ivec& theta) {
  if (static_cast<int>(theta.size()) != c.dim())
    throw config_error("point has wrong dimension");
  i64 ds = dot(delta_restricted(c), theta);
  int sector = ds > 0 ? 1 : (ds < 0 ? -1 : 0);
  chamber ch = principal_chamber(c, sector);
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 1000000) throw resource_cap_error("wall walk did not terminate");
    int cross = -1;
    for (size_t k = 0; k < ch.labels.size(); ++k)
      if (dot(ch.normals[k], theta) < 0) {
        cross = ch.labels[k];
        break;
      }
    if (cross < 0) break;
    ch = wall_cross(c, ch, cross);
  }
  cone_ref ref;
  for (size_t k = 0; k < ch.labels.size(); ++k)
    if (dot(ch.normals[k], theta) == 0) ref.tight.push_back(ch.labels[k]);
  ref.ch = std::move(ch);
  return ref;
}

namespace {

// level cutoff past which a restricted positive root keeps one sign on every
// chamber of the pair, so that higher levels never enter the comparison
i64 sep_level_bound(const context& c, const std::vector<ivec>& rays) {
  ivec delta = delta_restricted(c);
  std::vector<ivec> classes = restricted_root_classes(c);
  i64 pmax = 0, dmax = 0;
  for (const ivec& r : rays) {
    i64 dv = dot(delta, r);
    dmax = std::max(dmax, dv < 0 ? -dv : dv);
    for (const ivec& p : classes) {
      i64 v = dot(p, r);
      pmax = std::max(pmax, v < 0 ? -v : v);
    }
  }
  return pmax + dmax + 1;
}

std::vector<ivec> nonpositive_root_set(const context& c, const std::vector<ivec>& rays,
                                       int sector, i64 level) {
  std::vector<ivec> out;
  std::vector<ivec> pool =
      sector == 0 ? restricted_root_classes(c)
                  : positive_restricted_roots(c, static_cast<int>(level));
  for (const ivec& rho : pool) {
    bool neg = true;
    for (const ivec& r : rays)
      if (dot(rho, r) > 0) {
        neg = false;
        break;
      }
    if (neg) out.push_back(rho);
  }
  return out;
}

} // namespace

std::vector<ivec> separating_roots(const context& c, const chamber& a, const chamber& b) {
  if (a.sector != b.sector) throw config_error("separating roots need a shared sector");
  std::vector<ivec> rays = chamber_ray_list(c, a);
  std::vector<ivec> rb = chamber_ray_list(c, b);
  rays.insert(rays.end(), rb.begin(), rb.end());
  i64 level = a.sector == 0 ? 0 : sep_level_bound(c, rays);
  std::vector<ivec> na = nonpositive_root_set(c, chamber_ray_list(c, a), a.sector, level);
  std::vector<ivec> nb = nonpositive_root_set(c, rb, b.sector, level);
  std::vector<ivec> sep;
  std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                std::back_inserter(sep));
  return sep;
}

bool chamber_leq(const context& c, const chamber& a, const chamber& b) {
  if (a.sector != b.sector) throw config_error("comparison needs a shared sector");
  std::vector<ivec> rays = chamber_ray_list(c, a);
  std::vector<ivec> rb = chamber_ray_list(c, b);
  rays.insert(rays.end(), rb.begin(), rb.end());
  i64 level = a.sector == 0 ? 0 : sep_level_bound(c, rays);
  std::vector<ivec> na = nonpositive_root_set(c, chamber_ray_list(c, a), a.sector, level);
  std::vector<ivec> nb = nonpositive_root_set(c, rb, b.sector, level);
  return std::includes(nb.begin(), nb.end(), na.begin(), na.end());
}

std::vector<chamber> lower_chambers(const context& c, const chamber& top, int box,
                                    std::size_t cap) {
  std::vector<chamber> pool = enumerate_box(c, top.sector, box, cap);
  std::vector<i64> top_key = chamber_key(top);
  bool have_top = false;
  std::vector<chamber> out;
  for (const chamber& ch : pool) {
    if (chamber_key(ch) == top_key) {
      out.push_back(ch);
      have_top = true;
      continue;
    }
    if (chamber_leq(c, ch, top)) out.push_back(ch);
  }
  if (!have_top) out.push_back(top);
  return out;
}

atomicity_report check_atomicity(const context& c, const std::vector<int>& path, int sector) {
  chamber base = principal_chamber(c, sector);
  std::vector<chamber> stops{base};
  std::vector<ivec> crossed;
  chamber cur = base;
  for (int step : path) {
    auto it = std::find(cur.labels.begin(), cur.labels.end(), step);
    if (it == cur.labels.end()) throw config_error("path leaves the wall set");
    crossed.push_back(line_canonical(cur.normals[it - cur.labels.begin()]));
    cur = wall_cross(c, cur, step);
    stops.push_back(cur);
  }

  atomicity_report rep;
  std::set<ivec> uniq(crossed.begin(), crossed.end());
  rep.distinct_walls = uniq.size() == crossed.size();
  size_t n = path.size();
  rep.count_matches = separating_roots(c, base, cur).size() == n;
  rep.monotone = true;
  for (size_t t = 0; t < stops.size(); ++t)
    if (separating_roots(c, base, stops[t]).size() != t) {
      rep.monotone = false;
      break;
    }

  // depth limited breadth first search for a shorter gallery
  std::vector<i64> target = chamber_key(cur);
  rep.shortest = true;
  if (n > 0) {
    std::map<std::vector<i64>, size_t> dist;
    std::vector<chamber> queue{base};
    dist[chamber_key(base)] = 0;
    if (chamber_key(base) == target) rep.shortest = false;
    for (size_t head = 0; head < queue.size() && rep.shortest; ++head) {
      chamber q = queue[head];
      size_t dq = dist[chamber_key(q)];
      if (dq + 1 >= n) continue;
      for (int l : q.labels) {
        chamber nb = wall_cross(c, q, l);
        std::vector<i64> key = chamber_key(nb);
        if (dist.count(key)) continue;
        dist[key] = dq + 1;
        if (key == target) {
          rep.shortest = false;
          break;
        }
        queue.push_back(std::move(nb));
      }
    }
  }
  return rep;
}

namespace {

struct member_data {
  std::vector<ivec> rays; // canonical: primitive, sorted
  const hcone* bounds = nullptr;
  int delta_side = 2;          // +1 all rays positive, -1 all negative, 0 all zero, 2 mixed/empty
  std::vector<double> lo, hi;  // slice bounding box when delta_side is +1 or -1
};

member_data make_member_data(const context& c, const fan_member& fm) {
  member_data md;
  md.bounds = &fm.bounds;
  for (const ivec& r : fm.rays) md.rays.push_back(primitive(r));
  std::sort(md.rays.begin(), md.rays.end());
  ivec delta = delta_restricted(c);
  bool pos = !md.rays.empty(), neg = !md.rays.empty(), zero = !md.rays.empty();
  for (const ivec& r : md.rays) {
    i64 dv = dot(delta, r);
    pos = pos && dv > 0;
    neg = neg && dv < 0;
    zero = zero && dv == 0;
  }
  md.delta_side = pos ? 1 : neg ? -1 : zero ? 0 : 2;
  if (md.delta_side == 1 || md.delta_side == -1) {
    int d = c.dim();
    md.lo.assign(d, 0.0);
    md.hi.assign(d, 0.0);
    bool first = true;
    for (const ivec& r : md.rays) {
      double dv = static_cast<double>(dot(delta, r)) * md.delta_side;
      for (int k = 0; k < d; ++k) {
        double v = static_cast<double>(r[k]) / dv;
        double pad = 1e-9 * (1.0 + std::abs(v));
        if (first) {
          md.lo[k] = v - pad;
          md.hi[k] = v + pad;
        } else {
          md.lo[k] = std::min(md.lo[k], v - pad);
          md.hi[k] = std::max(md.hi[k], v + pad);
        }
      }
      first = false;
    }
  }
  return md;
}

// candidate separators ordered by level so early exits stay cheap
std::vector<ivec> descent_candidates(const context& c, const std::vector<member_data>& ms) {
  ivec delta = delta_restricted(c);
  std::vector<ivec> classes = restricted_root_classes(c);
  i64 level = 0;
  for (const member_data& m : ms)
    for (const ivec& r : m.rays) {
      i64 dv = dot(delta, r);
      level = std::max(level, dv < 0 ? -dv : dv);
      for (const ivec& p : classes) {
        i64 v = dot(p, r);
        level = std::max(level, v < 0 ? -v : v);
      }
    }
  level += 1;

  std::vector<ivec> base = finite_positive_roots(c.d);
  {
    ivec df = delta_vec(c.d);
    std::vector<ivec> mirrored;
    for (const ivec& b : base) mirrored.push_back(vsub(df, b));
    base.insert(base.end(), mirrored.begin(), mirrored.end());
  }
  std::vector<ivec> cands{delta};
  std::set<ivec> seen{delta};
  ivec shift(c.dim(), 0);
  for (i64 k = 0; k <= level; ++k) {
    for (const ivec& b : base) {
      ivec p = vadd(restrict_vec(c, b), shift);
      if (!is_zero(p) && seen.insert(p).second) cands.push_back(p);
    }
    shift = vadd(shift, delta);
  }
  return cands;
}

// -1 nonpositive with a strict entry, +1 nonnegative with a strict entry,
// 0 identically zero, 2 mixed
int side_of(const ivec& rho, const std::vector<ivec>& rays, const std::vector<size_t>& alive) {
  bool haspos = false, hasneg = false;
  for (size_t k : alive) {
    i64 v = dot(rho, rays[k]);
    haspos = haspos || v > 0;
    hasneg = hasneg || v < 0;
    if (haspos && hasneg) return 2;
  }
  if (haspos) return 1;
  if (hasneg) return -1;
  return 0;
}

std::vector<size_t> keep_zeros(const ivec& rho, const std::vector<ivec>& rays,
                               const std::vector<size_t>& alive) {
  std::vector<size_t> out;
  for (size_t k : alive)
    if (dot(rho, rays[k]) == 0) out.push_back(k);
  return out;
}

// true: intersection shown to be the common face; false: undecided
bool descent_pair(const std::vector<ivec>& cands, const member_data& A, const member_data& B) {
  std::vector<size_t> g1(A.rays.size()), g2(B.rays.size());
  for (size_t k = 0; k < g1.size(); ++k) g1[k] = k;
  for (size_t k = 0; k < g2.size(); ++k) g2[k] = k;
  auto equal_sets = [&]() {
    if (g1.size() != g2.size()) return false;
    for (size_t k = 0; k < g1.size(); ++k)
      if (A.rays[g1[k]] != B.rays[g2[k]]) return false;
    return true;
  };
  for (;;) {
    if (equal_sets()) return true;
    bool progress = false;
    for (const ivec& rho : cands) {
      int s1 = side_of(rho, A.rays, g1);
      int s2 = side_of(rho, B.rays, g2);
      if (s1 == 2 || s2 == 2) continue;
      if (s1 == 0 && s2 == 0) continue;
      bool fwd = s1 >= 0 && s2 <= 0;
      bool bwd = s1 <= 0 && s2 >= 0;
      if (!fwd && !bwd) continue;
      g1 = keep_zeros(rho, A.rays, g1);
      g2 = keep_zeros(rho, B.rays, g2);
      progress = true;
      break;
    }
    if (!progress) return false;
  }
}

bool is_face_of(const hcone& bounds, const vcone& inter) {
  hcone cut = bounds;
  for (const ivec& n : bounds.ineqs) {
    bool tight = true;
    for (const ivec& r : inter.rays)
      if (dot(n, r) != 0) {
        tight = false;
        break;
      }
    if (tight) cut.eqs.push_back(n);
  }
  return same_gens(dd_hull(cut), inter);
}

bool dd_pair_ok(const member_data& A, const member_data& B) {
  hcone both;
  both.dim = A.bounds->dim;
  both.eqs = A.bounds->eqs;
  both.eqs.insert(both.eqs.end(), B.bounds->eqs.begin(), B.bounds->eqs.end());
  both.ineqs = A.bounds->ineqs;
  both.ineqs.insert(both.ineqs.end(), B.bounds->ineqs.begin(), B.bounds->ineqs.end());
  vcone inter = dd_hull(both);
  if (!inter.lineality.empty())
    throw invariant_error("intersection of pointed cones is not pointed");
  return is_face_of(*A.bounds, inter) && is_face_of(*B.bounds, inter);
}

bool pair_ok(const std::vector<ivec>& cands, const member_data& A, const member_data& B) {
  // opposite open sides touch only at the origin
  if ((A.delta_side == 1 && B.delta_side == -1) ||
      (A.delta_side == -1 && B.delta_side == 1))
    return true;
  // disjoint slice boxes on a shared open side
  if (A.delta_side == B.delta_side && (A.delta_side == 1 || A.delta_side == -1)) {
    for (size_t k = 0; k < A.lo.size(); ++k)
      if (A.hi[k] < B.lo[k] || B.hi[k] < A.lo[k]) return true;
  }
  if (descent_pair(cands, A, B)) return true;
  return dd_pair_ok(A, B);
}

} // namespace

std::vector<fan_member> fan_members_of_chambers(const context& c,
                                                const std::vector<chamber>& chs,
                                                bool include_faces) {
  std::vector<fan_member> out;
  std::set<std::vector<i64>> seen;
  for (const chamber& ch : chs) {
    std::vector<std::vector<int>> tight_sets;
    if (!include_faces) {
      tight_sets.push_back({});
    } else {
      size_t m = ch.labels.size();
      for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<int> tight;
        for (size_t k = 0; k < m; ++k)
          if (mask & (size_t{1} << k)) tight.push_back(ch.labels[k]);
        tight_sets.push_back(std::move(tight));
      }
    }
    for (const std::vector<int>& tight : tight_sets) {
      fan_member fm;
      fm.rays = face_ray_list(c, ch, tight);
      for (ivec& r : fm.rays) r = primitive(r);
      std::sort(fm.rays.begin(), fm.rays.end());
      std::vector<i64> key;
      for (const ivec& r : fm.rays) key.insert(key.end(), r.begin(), r.end());
      key.push_back(ch.sector);
      if (!seen.insert(key).second) continue;
      fm.bounds = face_bounds(c, ch, tight);
      out.push_back(std::move(fm));
    }
  }
  return out;
}

bool verify_fan_serial(const context& c, const std::vector<fan_member>& members,
                       fan_issue* issue) {
  std::vector<member_data> ms;
  for (const fan_member& fm : members) ms.push_back(make_member_data(c, fm));
  std::vector<ivec> cands = descent_candidates(c, ms);
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) {
      if (pair_ok(cands, ms[i], ms[j])) continue;
      if (issue) {
        issue->a = static_cast<int>(i);
        issue->b = static_cast<int>(j);
      }
      return false;
    }
  return true;
}

bool verify_fan(const context& c, const std::vector<fan_member>& members, fan_issue* issue) {
#ifndef _OPENMP
  return verify_fan_serial(c, members, issue);
#else
  std::vector<member_data> ms;
  for (const fan_member& fm : members) ms.push_back(make_member_data(c, fm));
  std::vector<ivec> cands = descent_candidates(c, ms);
  long n = static_cast<long>(ms.size());
  long bad_a = -1, bad_b = -1;
  std::exception_ptr err;
  bool abort = false;

#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    bool local_abort;
#pragma omp atomic read
    local_abort = abort;
    if (local_abort) continue;
    try {
      for (long j = i + 1; j < n; ++j) {
        if (pair_ok(cands, ms[i], ms[j])) continue;
#pragma omp critical
        {
          if (bad_a < 0 || i < bad_a || (i == bad_a && j < bad_b)) {
            bad_a = i;
            bad_b = j;
          }
          abort = true;
        }
        break;
      }
    } catch (...) {
#pragma omp critical
      {
        if (!err) err = std::current_exception();
        abort = true;
      }
    }
  }
  if (err) std::rethrow_exception(err);
  if (bad_a >= 0) {
    if (issue) {
      issue->a = static_cast<int>(bad_a);
      issue->b = static_cast<int>(bad_b);
    }
    return false;
  }
  return true;
#endif
}

} // namespace flopcomb
