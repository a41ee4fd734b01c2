#include "flopcomb/diagram.hpp"

#include <algorithm>

#include "flopcomb/errors.hpp"

namespace flopcomb {

bool diagram::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

int diagram::index_of(int v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) throw config_error("vertex not in diagram: " + std::to_string(v));
  return static_cast<int>(it - vertices.begin());
}

i64 diagram::pairing(int vi, int vj) const { return cartan.at(index_of(vi), index_of(vj)); }

std::string diagram::name() const {
  std::string s(1, static_cast<char>(fam));
  s += std::to_string(rank);
  if (affine) s += "~";
  return s;
}

namespace {

ivec kernel_labels(const diagram& d) {
  std::vector<ivec> rows;
  for (int i = 0; i < d.n_vertices(); ++i) rows.push_back(d.cartan.row(i));
  auto basis = kernel_basis(rows, d.n_vertices());
  if (basis.size() != 1) throw invariant_error("affine cartan kernel is not one dimensional");
  ivec lab = basis[0];
  bool any_neg = std::any_of(lab.begin(), lab.end(), [](i64 x) { return x < 0; });
  if (any_neg) lab = vneg(lab);
  for (i64 x : lab)
    if (x <= 0) throw invariant_error("cartan kernel generator is not strictly positive");
  if (lab[0] != 1) throw invariant_error("label at the extended vertex is not 1");
  return lab;
}

} // namespace

diagram build_diagram(family f, int rank, bool affine) {
  diagram d;
  d.fam = f;
  d.rank = rank;
  d.affine = affine;
  switch (f) {
    case family::A:
      if (rank < 1) throw config_error("A rank must be >= 1");
      break;
    case family::D:
      if (rank < 4) throw config_error("D rank must be >= 4");
      break;
    case family::E:
      if (rank < 6 || rank > 8) throw config_error("E rank must be 6, 7 or 8");
      break;
    default:
      throw config_error("unknown family");
  }

  for (int v = affine ? 0 : 1; v <= rank; ++v) d.vertices.push_back(v);

  auto add_edge = [&d](int a, int b) {
    if (a > b) std::swap(a, b);
    d.edges.push_back({a, b});
  };

  switch (f) {
    case family::A:
      for (int v = 1; v < rank; ++v) add_edge(v, v + 1);
      if (affine) {
        add_edge(0, 1);
        if (rank > 1) add_edge(0, rank);
      }
      break;
    case family::D:
      for (int v = 1; v + 1 <= rank - 1; ++v) add_edge(v, v + 1);
      add_edge(rank - 2, rank);
      if (affine) add_edge(0, 2);
      break;
    case family::E:
      for (int v = 1; v + 1 <= rank - 1; ++v) add_edge(v, v + 1);
      add_edge(rank == 8 ? 5 : 3, rank);
      if (affine) add_edge(0, rank == 6 ? 6 : 1);
      break;
  }
  std::sort(d.edges.begin(), d.edges.end());

  int n = d.n_vertices();
  d.cartan = imat(n, n);
  for (int i = 0; i < n; ++i) d.cartan.at(i, i) = 2;
  i64 off = (f == family::A && rank == 1 && affine) ? -2 : -1;
  for (auto& e : d.edges) {
    int i = d.index_of(e[0]), j = d.index_of(e[1]);
    d.cartan.at(i, j) = off;
    d.cartan.at(j, i) = off;
  }

  if (affine) d.kac = kernel_labels(d);
  return d;
}

diagram parse_diagram(const std::string& name) {
  if (name.size() < 2) throw config_error("bad diagram name: '" + name + "'");
  family f;
  switch (name[0]) {
    case 'A': f = family::A; break;
    case 'D': f = family::D; break;
    case 'E': f = family::E; break;
    default: throw config_error("unknown diagram family in '" + name + "'");
  }
  size_t pos = 1;
  int rank = 0;
  bool got_digit = false;
  while (pos < name.size() && name[pos] >= '0' && name[pos] <= '9') {
    rank = rank * 10 + (name[pos] - '0');
    got_digit = true;
    ++pos;
    if (rank > 64) throw config_error("diagram rank out of range in '" + name + "'");
  }
  if (!got_digit) throw config_error("missing rank in diagram name '" + name + "'");
  bool affine = false;
  if (pos < name.size() && name[pos] == '~') {
    affine = true;
    ++pos;
  }
  if (pos != name.size()) throw config_error("trailing characters in diagram name '" + name + "'");
  return build_diagram(f, rank, affine);
}

ivec kac_labels(const diagram& d) {
  if (!d.affine) throw config_error("kac labels are defined for affine diagrams only");
  return d.kac;
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

// s_p acting on a vector in simple-root coordinates (positions)
ivec reflect_pos(const diagram& d, int p, ivec v) {
  i64 c = 0;
  for (int j = 0; j < d.n_vertices(); ++j) c = ck_add(c, ck_mul(d.cartan.at(p, j), v[j]));
  v[p] = ck_sub(v[p], c);
  return v;
}

ivec apply_word_pos(const diagram& d, const std::vector<int>& word, ivec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect_pos(d, *it, v);
  return v;
}

} // namespace

std::vector<int> longest_involution(const diagram& d) {
  int max_id = d.vertices.back();
  std::vector<int> inv(static_cast<size_t>(max_id) + 1, -1);
  if (d.affine) {
    for (int v : d.vertices) inv[v] = v;
    return inv;
  }
  int n = d.n_vertices();
  // greedy ascent to the longest element: append the smallest simple
  // reflection that still sends a simple root to a positive root
  std::vector<int> word;
  const int iter_cap = 4096;
  for (int iter = 0;; ++iter) {
    if (iter > iter_cap) throw invariant_error("longest element ascent did not terminate");
    int pick = -1;
    for (int p = 0; p < n; ++p) {
      ivec alpha(n, 0);
      alpha[p] = 1;
      if (positive_vec(apply_word_pos(d, word, alpha))) {
        pick = p;
        break;
      }
    }
    if (pick < 0) break;
    word.push_back(pick);
  }
  for (int p = 0; p < n; ++p) {
    ivec alpha(n, 0);
    alpha[p] = 1;
    ivec img = apply_word_pos(d, word, alpha);
    int q = -1;
    for (int t = 0; t < n; ++t) {
      if (img[t] == 0) continue;
      if (img[t] != -1 || q >= 0) throw invariant_error("longest element does not permute simple roots");
      q = t;
    }
    if (q < 0) throw invariant_error("longest element sent a simple root to zero");
    inv[d.vertices[p]] = d.vertices[q];
  }
  return inv;
}

} // namespace flopcomb
