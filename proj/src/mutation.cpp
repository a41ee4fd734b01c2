#include "flopcomb/mutation.hpp"

#include <algorithm>
#include <map>

#include "flopcomb/errors.hpp"
#include "flopcomb/rootlat.hpp"

namespace flopcomb {

namespace {

std::vector<int> normalized_subset(const diagram& d, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int v : J)
    if (!d.has_vertex(v)) throw config_error("marked vertex not in diagram");
  return J;
}

} // namespace

int iota(const diagram& d, const std::vector<int>& J, int i) {
  std::vector<int> Js = normalized_subset(d, J);
  if (!d.has_vertex(i)) throw config_error("mutation vertex not in diagram");
  if (std::binary_search(Js.begin(), Js.end(), i))
    throw config_error("mutation vertex is already marked");
  Js.insert(std::lower_bound(Js.begin(), Js.end(), i), i);
  return subgraph_involution(d, Js)[i];
}

std::vector<int> mutate(const diagram& d, const std::vector<int>& J, int i) {
  int part = iota(d, J, i);
  std::vector<int> out = normalized_subset(d, J);
  out.insert(std::lower_bound(out.begin(), out.end(), i), i);
  out.erase(std::find(out.begin(), out.end(), part));
  return out;
}

std::vector<int> apply_path(const diagram& d, std::vector<int> J,
                            const std::vector<int>& steps) {
  J = normalized_subset(d, J);
  for (int s : steps) J = mutate(d, J, s);
  return J;
}

std::vector<int> reverse_path(const diagram& d, std::vector<int> J,
                              const std::vector<int>& steps) {
  J = normalized_subset(d, J);
  std::vector<int> undo;
  for (int s : steps) {
    undo.push_back(iota(d, J, s));
    J = mutate(d, J, s);
  }
  std::reverse(undo.begin(), undo.end());
  return undo;
}

int mutation_class::node_index(const std::vector<int>& J) const {
  for (size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k] == J) return static_cast<int>(k);
  return -1;
}

mutation_class enumerate_mutation_class(const diagram& d, std::vector<int> J0,
                                        std::size_t node_cap) {
  J0 = normalized_subset(d, J0);
  if (J0.size() >= d.vertices.size())
    throw config_error("marked set must be a proper subset");

  mutation_class mc;
  mc.d = d;
  std::map<std::vector<int>, int> index;
  mc.nodes.push_back(J0);
  index[J0] = 0;

  for (size_t head = 0; head < mc.nodes.size(); ++head) {
    std::vector<int> J = mc.nodes[head];
    for (int i : d.vertices) {
      if (std::binary_search(J.begin(), J.end(), i)) continue;
      std::vector<int> K = mutate(d, J, i);
      auto it = index.find(K);
      int to;
      if (it == index.end()) {
        to = static_cast<int>(mc.nodes.size());
        if (mc.nodes.size() + 1 > node_cap)
          throw resource_cap_error("mutation class exceeds node cap");
        mc.nodes.push_back(K);
        index[K] = to;
      } else {
        to = it->second;
      }
      mc.arrows.push_back({static_cast<int>(head), i, to});
    }
  }
  return mc;
}

} // namespace flopcomb
