#include "flopcomb/hearts.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flopcomb/errors.hpp"

namespace flopcomb {

namespace {

std::string subscript(int v) {
  std::string digits = std::to_string(v);
  std::string out;
  for (char ch : digits) {
    out += "\xE2\x82";
    out += static_cast<char>(0x80 + (ch - '0'));
  }
  return out;
}

std::vector<ivec> canonical_rays(const context& c, const chamber& ch) {
  std::vector<ivec> rays = chamber_ray_list(c, ch);
  for (ivec& r : rays) r = primitive(r);
  std::sort(rays.begin(), rays.end());
  return rays;
}

// lexicographically least shortest crossing word from the principal chamber
// of the same sector. gallery distance equals the separator count, and a
// label starts a geodesic exactly when crossing it drops that count, so a
// greedy descent over ascending labels finds the least geodesic directly.
std::vector<int> least_path(const context& c, const chamber& target) {
  chamber cur = principal_chamber(c, target.sector);
  std::vector<int> path;
  size_t dist = separating_roots(c, cur, target).size();
  while (dist > 0) {
    bool stepped = false;
    for (int l : cur.labels) {
      chamber nb = wall_cross(c, cur, l);
      size_t nd = separating_roots(c, nb, target).size();
      if (nd == dist - 1) {
        cur = std::move(nb);
        path.push_back(l);
        dist = nd;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw invariant_error("no wall crossing approaches the target");
    if (path.size() > 100000) throw resource_cap_error("path search exploded");
  }
  if (chamber_key(cur) != chamber_key(target))
    throw invariant_error("separator descent missed the target");
  return path;
}

ivec interior_point(const context& c, const chamber& ch) {
  ivec p(c.dim(), 0);
  for (const ivec& r : chamber_ray_list(c, ch)) p = vadd(p, r);
  return p;
}

} // namespace

std::string tilt_word(const std::vector<int>& path, int shift) {
  std::string out;
  const char* functor = shift == 0 ? "\xCE\xA8" : "\xCE\xA6"; // Psi / Phi
  for (int l : path) out += functor + subscript(l);
  out += "H";
  if (shift != 0) out += "[-1]";
  return out;
}

std::string model_word(const std::vector<int>& path) {
  if (path.empty()) return "X";
  std::string out = "\xCE\xBD"; // nu
  for (auto it = path.rbegin(); it != path.rend(); ++it) out += subscript(*it);
  return out + "X";
}

heart_descriptor heart_of_chamber(const context& c, const chamber& ch) {
  if (ch.sector != 1 && ch.sector != -1)
    throw config_error("algebraic hearts live on the open sides");
  heart_descriptor h;
  h.kind = heart_kind::algebraic;
  h.sector = ch.sector;
  h.path = least_path(c, ch);
  h.shift = ch.sector == 1 ? 0 : -1;
  h.rays = canonical_rays(c, ch);
  h.display = tilt_word(h.path, h.shift);
  return h;
}

heart_descriptor geometric_interval(const context& c, const chamber& ch) {
  if (ch.sector != 0) throw config_error("geometric hearts live on the level zero fan");
  heart_descriptor h;
  h.kind = heart_kind::geometric_interval;
  h.sector = 0;
  h.path = least_path(c, ch);
  h.rays = canonical_rays(c, ch);
  h.display = model_word(h.path);
  return h;
}

heart_descriptor semigeometric_of_cone(const context& c, const cone_ref& ref) {
  if (ref.ch.sector != 0) throw config_error("partial contractions live on the level zero fan");
  if (ref.tight.empty()) throw config_error("cone is maximal, not a partial contraction");
  std::vector<ivec> sigma = face_ray_list(c, ref.ch, ref.tight);
  if (sigma.empty()) throw not_heart_cone_error("the zero cone is not a heart cone");

  auto vanishes_on_sigma = [&](const ivec& n) {
    for (const ivec& r : sigma)
      if (dot(n, r) != 0) return false;
    return true;
  };

  // star of the cone: every maximal chamber whose closure holds it, found by
  // crossing only the walls that pass through the cone
  std::vector<chamber> star{ref.ch};
  std::set<std::vector<i64>> seen{chamber_key(ref.ch)};
  std::set<ivec> through;
  for (size_t head = 0; head < star.size(); ++head) {
    chamber cur = star[head];
    for (size_t k = 0; k < cur.labels.size(); ++k) {
      if (!vanishes_on_sigma(cur.normals[k])) continue;
      through.insert(line_canonical(cur.normals[k]));
      chamber nb = wall_cross(c, cur, cur.labels[k]);
      if (seen.insert(chamber_key(nb)).second) star.push_back(std::move(nb));
    }
  }

  ivec p0 = interior_point(c, principal_chamber(c, 0));
  const chamber* tau = nullptr;
  for (const chamber& cand : star) {
    ivec p = interior_point(c, cand);
    bool same_side = true;
    for (const ivec& hpl : through) {
      i64 s0 = dot(hpl, p0);
      i64 s = dot(hpl, p);
      if (s0 == 0 || s == 0) throw invariant_error("hyperplane through a chamber interior");
      if ((s0 > 0) != (s > 0)) {
        same_side = false;
        break;
      }
    }
    if (!same_side) continue;
    if (tau) throw invariant_error("resolving chamber is not unique");
    tau = &cand;
  }
  if (!tau) throw invariant_error("no chamber on the base side of every wall");

  heart_descriptor h;
  h.kind = heart_kind::semi_geometric;
  h.sector = 0;
  h.path = least_path(c, *tau);
  for (size_t k = 0; k < tau->labels.size(); ++k)
    if (vanishes_on_sigma(tau->normals[k])) h.contracted.push_back(tau->labels[k]);

  // split the contracted curves by adjacency in the model: two curves meet
  // exactly when a diagram path joins them through marked vertices
  std::set<int> marked(tau->kset.begin(), tau->kset.end());
  std::vector<int> comp_of(h.contracted.size(), -1);
  for (size_t a = 0; a < h.contracted.size(); ++a) {
    if (comp_of[a] >= 0) continue;
    comp_of[a] = static_cast<int>(h.components.size());
    std::vector<int> comp{h.contracted[a]};
    std::set<int> blob{h.contracted[a]};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<int> reach = blob;
      std::vector<int> work(blob.begin(), blob.end());
      for (size_t head = 0; head < work.size(); ++head)
        for (int nb : c.d.vertices) {
          if (!c.d.adjacent(work[head], nb) || reach.count(nb)) continue;
          if (!marked.count(nb)) continue;
          reach.insert(nb);
          work.push_back(nb);
        }
      for (size_t b = 0; b < h.contracted.size(); ++b) {
        if (comp_of[b] >= 0 || blob.count(h.contracted[b])) continue;
        bool touches = false;
        for (int nb : c.d.vertices)
          if (c.d.adjacent(h.contracted[b], nb) && reach.count(nb)) {
            touches = true;
            break;
          }
        if (touches) {
          comp_of[b] = comp_of[a];
          comp.push_back(h.contracted[b]);
          blob.insert(h.contracted[b]);
          grew = true;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    h.components.push_back(std::move(comp));
  }

  h.rays = sigma;
  for (ivec& r : h.rays) r = primitive(r);
  std::sort(h.rays.begin(), h.rays.end());
  h.display = "zeroper(" + model_word(h.path) + ",Y)";
  return h;
}

heart_descriptor classify_cone(const context& c, const cone_ref& ref) {
  std::vector<ivec> rays = face_ray_list(c, ref.ch, ref.tight);
  if (rays.empty()) throw not_heart_cone_error("the zero cone is not a heart cone");
  if (ref.ch.sector != 0) {
    if (!ref.tight.empty())
      throw not_heart_cone_error("proper faces of open sector chambers are not heart cones");
    return heart_of_chamber(c, ref.ch);
  }
  if (ref.tight.empty()) return geometric_interval(c, ref.ch);
  return semigeometric_of_cone(c, ref);
}

brick_class brick_label(const context& c, const chamber& a, const chamber& b) {
  if (a.sector == 0 && b.sector == 0) {
    if (chamber_key(a) != chamber_key(b))
      throw config_error("imaginary labels are attached to one geometric interval");
    brick_class out;
    out.cls = delta_restricted(c);
    out.imaginary = true;
    return out;
  }
  if (a.sector != b.sector) throw config_error("not a covering pair");
  std::vector<ivec> sep = separating_roots(c, a, b);
  if (sep.size() != 1 || !chamber_leq(c, a, b)) throw config_error("not a covering pair");
  brick_class out;
  out.cls = primitive(sep[0]);
  out.imaginary = false;
  return out;
}

std::pair<heart_descriptor, heart_descriptor> numerical_interval(const context& c,
                                                                 const ivec& theta) {
  cone_ref ref = locate(c, theta);
  heart_descriptor h = classify_cone(c, ref);
  heart_descriptor lo = h, hi = h;
  switch (h.kind) {
    case heart_kind::algebraic:
      break;
    case heart_kind::geometric_interval:
      lo.display = "anticoh " + model_word(h.path);
      hi.display = "coh " + model_word(h.path);
      break;
    case heart_kind::semi_geometric:
      lo.display = "antizeroper(" + model_word(h.path) + ",Y)";
      hi.display = "zeroper(" + model_word(h.path) + ",Y)";
      break;
  }
  return {lo, hi};
}

namespace {

// columns of the class basis: restricted delta, then the images of the
// model's finite wall classes under the path isomorphism
std::vector<ivec> twist_basis(const context& c, const std::vector<int>& model_path,
                              context* src_out) {
  std::vector<int> marked_src = apply_path(c.d, c.marked, model_path);
  context src = make_context(c.d, marked_src);
  linear_map phi = phi_path(c, model_path);
  if (phi.source_walls != src.walls || phi.target_walls != c.walls)
    throw invariant_error("path isomorphism walls disagree with the model");
  std::vector<ivec> cols{delta_restricted(c)};
  for (int i : src.finite_walls()) cols.push_back(phi.m.col(src.wall_index(i)));
  if (src_out) *src_out = src;
  return cols;
}

qvec basis_coefficients(const context& c, const std::vector<ivec>& cols, const ivec& v) {
  int n = c.dim();
  std::vector<ivec> rows(n, ivec(cols.size(), 0));
  for (size_t k = 0; k < cols.size(); ++k)
    for (int r = 0; r < n; ++r) rows[r][k] = cols[k][r];
  qvec b(n, rat(0));
  for (int r = 0; r < n; ++r) b[r] = rat(v[r]);
  auto x = solve(rows, b, static_cast<int>(cols.size()));
  if (!x) throw config_error("twist basis is degenerate");
  return *x;
}

} // namespace

ivec pic_action_on_class(const context& c, const std::vector<int>& model_path,
                         const std::vector<i64>& degrees, const ivec& v) {
  if (static_cast<int>(v.size()) != c.dim()) throw config_error("class has wrong dimension");
  context src = make_context(c.d, c.marked);
  std::vector<ivec> cols = twist_basis(c, model_path, &src);
  if (degrees.size() != src.finite_walls().size())
    throw config_error("degree tuple does not match the model's curve set");
  qvec x = basis_coefficients(c, cols, v);
  i64 s = 0;
  for (size_t j = 0; j < degrees.size(); ++j) {
    const rat& coeff = x[1 + j];
    if (coeff.den != 1) throw config_error("class is not integral in the twist basis");
    s = ck_add(s, ck_mul(degrees[j], coeff.num));
  }
  return vadd(v, vscale(s, delta_restricted(c)));
}

chamber pic_translate_chamber(const context& c, const std::vector<int>& model_path,
                              const std::vector<i64>& degrees, const chamber& ch) {
  int n = c.dim();
  imat p(n, n);
  for (int k = 0; k < n; ++k) {
    ivec e(n, 0);
    e[k] = 1;
    ivec img = pic_action_on_class(c, model_path, degrees, e);
    for (int r = 0; r < n; ++r) p.at(r, k) = img[r];
  }
  imat pt = p.transpose();

  ivec q = pt.apply(interior_point(c, ch));
  cone_ref ref = locate(c, q);
  if (!ref.tight.empty() || ref.ch.sector != ch.sector)
    throw invariant_error("translated chamber left the arrangement");

  std::vector<i64> neg;
  for (i64 d : degrees) neg.push_back(ck_neg(d));
  std::vector<ivec> expected;
  for (const ivec& nrm : ch.normals)
    expected.push_back(primitive(pic_action_on_class(c, model_path, neg, nrm)));
  std::sort(expected.begin(), expected.end());
  std::vector<ivec> got;
  for (const ivec& nrm : ref.ch.normals) got.push_back(primitive(nrm));
  std::sort(got.begin(), got.end());
  if (expected != got) throw invariant_error("translated walls do not match the twist");
  return ref.ch;
}

std::vector<movable_cone> movable_fan(const context& c, std::size_t cap) {
  std::vector<chamber> chs = enumerate_sector0(c, cap);
  std::vector<fan_member> members = fan_members_of_chambers(c, chs, true);
  if (!verify_fan(c, members, nullptr))
    throw invariant_error("level zero cones do not form a fan");
  std::vector<movable_cone> out;
  for (chamber& ch : chs) {
    movable_cone mc;
    mc.model_path = ch.path;
    mc.model = model_word(ch.path);
    mc.ch = std::move(ch);
    out.push_back(std::move(mc));
  }
  return out;
}

} // namespace flopcomb
