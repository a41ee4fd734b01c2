#include "flopcomb/polyhedra.hpp"

#include <algorithm>

#include "flopcomb/errors.hpp"

namespace flopcomb {

namespace {

// tight processed inequalities at a ray
std::vector<int> tight_set(const std::vector<ivec>& processed, const ivec& r) {
  std::vector<int> t;
  for (size_t k = 0; k < processed.size(); ++k)
    if (dot(processed[k], r) == 0) t.push_back(static_cast<int>(k));
  return t;
}

bool in_span(const std::vector<ivec>& basis, const ivec& v, int dim) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<ivec> rows = basis;
  int r0 = rank_of(rows, dim);
  rows.push_back(v);
  return rank_of(rows, dim) == r0;
}

} // namespace

vcone dd_hull(const hcone& h) {
  // start from the solution space of the equalities as pure lineality
  vcone g;
  g.dim = h.dim;
  if (h.eqs.empty()) {
    for (int k = 0; k < h.dim; ++k) {
      ivec e(h.dim, 0);
      e[k] = 1;
      g.lineality.push_back(e);
    }
  } else {
    g.lineality = kernel_basis(h.eqs, h.dim);
  }

  std::vector<ivec> processed;
  for (const ivec& n : h.ineqs) {
    if (static_cast<int>(n.size()) != h.dim) throw invariant_error("dd: normal has wrong dimension");
    // pivot: a lineality direction escaping the hyperplane becomes a ray and
    // everything else is projected into the hyperplane along it
    int piv = -1;
    for (size_t k = 0; k < g.lineality.size(); ++k)
      if (dot(n, g.lineality[k]) != 0) {
        piv = static_cast<int>(k);
        break;
      }
    if (piv >= 0) {
      ivec l0 = g.lineality[piv];
      if (dot(n, l0) < 0) l0 = vneg(l0);
      i64 nl = dot(n, l0);
      std::vector<ivec> newlin;
      for (size_t k = 0; k < g.lineality.size(); ++k) {
        if (static_cast<int>(k) == piv) continue;
        ivec l = g.lineality[k];
        newlin.push_back(primitive(vsub(vscale(nl, l), vscale(dot(n, l), l0))));
      }
      g.lineality = std::move(newlin);
      std::vector<ivec> newrays;
      for (const ivec& r : g.rays) {
        ivec rp = primitive(vsub(vscale(nl, r), vscale(dot(n, r), l0)));
        if (!in_span(g.lineality, rp, h.dim)) newrays.push_back(rp);
      }
      newrays.push_back(primitive(l0));
      std::sort(newrays.begin(), newrays.end());
      newrays.erase(std::unique(newrays.begin(), newrays.end()), newrays.end());
      g.rays = std::move(newrays);
      processed.push_back(n);
      continue;
    }

    std::vector<ivec> pos, zero, neg;
    for (const ivec& r : g.rays) {
      i64 s = dot(n, r);
      if (s > 0)
        pos.push_back(r);
      else if (s == 0)
        zero.push_back(r);
      else
        neg.push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(n);
      continue;
    }

    std::vector<ivec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    int lin_dim = static_cast<int>(g.lineality.size());
    int want_rank = h.dim - lin_dim - 2;
    if (!pos.empty() && want_rank < 0)
      throw invariant_error("dd: impossible ray pair in tiny quotient");
    for (const ivec& rp : pos) {
      std::vector<int> tp = tight_set(processed, rp);
      for (const ivec& rm : neg) {
        std::vector<int> tm = tight_set(processed, rm);
        std::vector<int> common;
        std::set_intersection(tp.begin(), tp.end(), tm.begin(), tm.end(),
                              std::back_inserter(common));
        std::vector<ivec> rows = h.eqs;
        for (int k : common) rows.push_back(processed[k]);
        // adjacency: the minimal common face has dimension lineality + 2,
        // i.e. the tight rows reach full possible rank
        if (rank_of(rows, h.dim) != want_rank) continue;
        ivec comb = vsub(vscale(dot(n, rp), rm), vscale(dot(n, rm), rp));
        next.push_back(primitive(comb));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    g.rays = std::move(next);
    processed.push_back(n);
  }
  return canonical_gens(std::move(g));
}

vcone canonical_gens(vcone g) {
  for (ivec& r : g.rays) r = primitive(r);
  std::sort(g.rays.begin(), g.rays.end());
  g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
  g.lineality = span_canonical(g.lineality, g.dim);
  return g;
}

bool same_gens(const vcone& a, const vcone& b) {
  vcone x = canonical_gens(a), y = canonical_gens(b);
  return x.dim == y.dim && x.rays == y.rays && x.lineality == y.lineality;
}

int gens_dimension(const vcone& g) {
  std::vector<ivec> rows = g.lineality;
  rows.insert(rows.end(), g.rays.begin(), g.rays.end());
  if (rows.empty()) return 0;
  return rank_of(rows, g.dim);
}

bool contains_point(const hcone& h, const ivec& x) {
  for (const ivec& e : h.eqs)
    if (dot(e, x) != 0) return false;
  for (const ivec& n : h.ineqs)
    if (dot(n, x) < 0) return false;
  return true;
}

bool contains_point_strict(const hcone& h, const ivec& x) {
  for (const ivec& e : h.eqs)
    if (dot(e, x) != 0) return false;
  for (const ivec& n : h.ineqs)
    if (dot(n, x) <= 0) return false;
  return true;
}

ivec relint_point(const vcone& g) {
  ivec p(g.dim, 0);
  for (const ivec& r : g.rays) p = vadd(p, r);
  return p;
}

int intersection_dimension(const hcone& a, const hcone& b) {
  if (a.dim != b.dim) throw invariant_error("intersection: dimension mismatch");
  hcone c;
  c.dim = a.dim;
  c.eqs = a.eqs;
  c.eqs.insert(c.eqs.end(), b.eqs.begin(), b.eqs.end());
  c.ineqs = a.ineqs;
  c.ineqs.insert(c.ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  return gens_dimension(dd_hull(c));
}

} // namespace flopcomb
