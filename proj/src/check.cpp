#include "flopcomb/check.hpp"

#include <algorithm>
#include <set>

#include "flopcomb/arrangement.hpp"
#include "flopcomb/errors.hpp"
#include "flopcomb/hearts.hpp"
#include "flopcomb/mutation.hpp"
#include "json.hpp"

namespace flopcomb {

namespace {

// property runner: records the first failure and keeps going so the report
// stays complete
struct suite_run {
  suite_result res;

  explicit suite_run(const std::string& name) { res.name = name; }

  template <typename F>
  void prop(const std::string& name, F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok && res.pass) {
      res.pass = false;
      res.failed_property = name;
    }
  }

  void detail(const std::string& k, const std::string& v) { res.details.emplace_back(k, v); }
};

ivec kac_by_position(const diagram& d) {
  ivec v(d.n_vertices());
  for (int k = 0; k < d.n_vertices(); ++k) v[k] = d.kac[d.vertices[k]];
  return v;
}

suite_result suite_diagram(const diagram& d) {
  suite_run s("diagram");
  s.prop("cartan_diagonal_two", [&] {
    for (int i = 0; i < d.n_vertices(); ++i)
      if (d.cartan.at(i, i) != 2) return false;
    return true;
  });
  s.prop("cartan_symmetric", [&] {
    for (int i = 0; i < d.n_vertices(); ++i)
      for (int j = 0; j < d.n_vertices(); ++j)
        if (d.cartan.at(i, j) != d.cartan.at(j, i)) return false;
    return true;
  });
  s.prop("cartan_offdiagonal_nonpositive", [&] {
    for (int i = 0; i < d.n_vertices(); ++i)
      for (int j = 0; j < d.n_vertices(); ++j)
        if (i != j && d.cartan.at(i, j) > 0) return false;
    return true;
  });
  s.prop("kac_labels_positive", [&] {
    if (!d.affine) return true;
    for (int v : d.vertices)
      if (d.kac[v] <= 0) return false;
    return d.kac[0] == 1;
  });
  s.prop("kac_annihilates_cartan", [&] {
    if (!d.affine) return true;
    return is_zero(d.cartan.apply(kac_by_position(d)));
  });
  s.detail("vertices", std::to_string(d.n_vertices()));
  return s.res;
}

suite_result suite_root_lattice(const context& c) {
  suite_run s("root_lattice");
  s.prop("reflections_preserve_roots", [&] {
    std::vector<ivec> pool = enumerate_real_roots(c.d, 2);
    // a simple reflection moves the level by at most two
    std::vector<ivec> big = enumerate_real_roots(c.d, 4);
    std::set<ivec> memb(big.begin(), big.end());
    for (int v : c.d.vertices)
      for (const ivec& r : pool)
        if (!memb.count(simple_reflection(c.d, v, r))) return false;
    return true;
  });
  s.prop("phi_fixes_delta", [&] {
    for (int i : c.walls) {
      linear_map phi = phi_map(c, i);
      context src = make_context(c.d, mutate(c.d, c.marked, i));
      if (phi.m.apply(delta_restricted(src)) != delta_restricted(c)) return false;
    }
    return true;
  });
  s.prop("phi_partner_inverts", [&] {
    for (int i : c.walls) {
      linear_map phi = phi_map(c, i);
      context src = make_context(c.d, mutate(c.d, c.marked, i));
      int part = iota(c.d, c.marked, i);
      linear_map back = phi_map(src, part);
      if (phi.m * back.m != imat::identity(c.dim())) return false;
    }
    return true;
  });
  s.prop("phi_negates_crossed_simple", [&] {
    for (int i : c.walls) {
      linear_map phi = phi_map(c, i);
      context src = make_context(c.d, mutate(c.d, c.marked, i));
      int part = iota(c.d, c.marked, i);
      if (phi.m.apply(wall_simple(src, part)) != vneg(wall_simple(c, i))) return false;
    }
    return true;
  });
  s.detail("restricted_classes", std::to_string(restricted_root_classes(c).size()));
  return s.res;
}

suite_result suite_mutation(const context& c, std::size_t cap) {
  suite_run s("mutation");
  s.prop("iota_is_an_involution", [&] {
    for (int i : c.walls) {
      std::vector<int> J2 = mutate(c.d, c.marked, i);
      int part = iota(c.d, c.marked, i);
      if (iota(c.d, J2, part) != i) return false;
    }
    return true;
  });
  s.prop("mutate_partner_returns", [&] {
    for (int i : c.walls) {
      std::vector<int> J2 = mutate(c.d, c.marked, i);
      int part = iota(c.d, c.marked, i);
      if (mutate(c.d, J2, part) != c.marked) return false;
    }
    return true;
  });
  std::size_t nodes = 0, arrows = 0;
  s.prop("class_is_closed", [&] {
    mutation_class mc = enumerate_mutation_class(c.d, c.marked, cap);
    nodes = mc.nodes.size();
    arrows = mc.arrows.size();
    if (arrows != nodes * c.walls.size()) return false;
    for (const mutation_arrow& a : mc.arrows)
      if (a.to < 0 || a.to >= static_cast<int>(nodes)) return false;
    return true;
  });
  s.detail("nodes", std::to_string(nodes));
  s.detail("arrows", std::to_string(arrows));
  return s.res;
}

suite_result suite_arrangement(const context& c, int box, std::size_t cap) {
  suite_run s("arrangement");
  std::vector<chamber> plus, zero;
  s.prop("box_enumeration_runs", [&] {
    plus = enumerate_box(c, 1, box, cap);
    zero = enumerate_sector0(c, cap);
    return !plus.empty() && !zero.empty();
  });
  s.prop("serial_parallel_equal", [&] {
    std::vector<chamber> sp = enumerate_box_serial(c, 1, box, cap);
    if (sp.size() != plus.size()) return false;
    for (size_t k = 0; k < sp.size(); ++k)
      if (chamber_key(sp[k]) != chamber_key(plus[k])) return false;
    std::vector<chamber> sz = enumerate_sector0_serial(c, cap);
    if (sz.size() != zero.size()) return false;
    for (size_t k = 0; k < sz.size(); ++k)
      if (chamber_key(sz[k]) != chamber_key(zero[k])) return false;
    return true;
  });
  s.prop("keys_distinct", [&] {
    std::set<std::vector<i64>> seen;
    for (const chamber& ch : plus)
      if (!seen.insert(chamber_key(ch)).second) return false;
    seen.clear();
    for (const chamber& ch : zero)
      if (!seen.insert(chamber_key(ch)).second) return false;
    return true;
  });
  s.prop("wall_cross_partner_returns", [&] {
    chamber p = principal_chamber(c, 1);
    for (int l : p.labels) {
      chamber nb = wall_cross(c, p, l);
      chamber back = wall_cross(c, nb, iota(c.d, p.kset, l));
      if (chamber_key(back) != chamber_key(p)) return false;
    }
    return true;
  });
  std::size_t atomic_checked = 0;
  s.prop("discovery_paths_atomic", [&] {
    for (const chamber& ch : plus) {
      if (ch.path.size() > 8) continue; // keep the gallery search affordable
      ++atomic_checked;
      if (!check_atomicity(c, ch.path, 1).atomic()) return false;
    }
    return true;
  });
  s.prop("fan_axioms", [&] {
    bool faces = plus.size() <= 128;
    if (!verify_fan(c, fan_members_of_chambers(c, plus, faces), nullptr)) return false;
    if (!verify_fan(c, fan_members_of_chambers(c, zero, zero.size() <= 128), nullptr))
      return false;
    return true;
  });
  s.detail("box_chambers", std::to_string(plus.size()));
  s.detail("sector0_chambers", std::to_string(zero.size()));
  s.detail("atomicity_paths_checked", std::to_string(atomic_checked));
  return s.res;
}

suite_result suite_hearts(const context& c, std::size_t cap) {
  suite_run s("hearts");
  s.prop("principal_hearts_algebraic", [&] {
    heart_descriptor up = heart_of_chamber(c, principal_chamber(c, 1));
    heart_descriptor dn = heart_of_chamber(c, principal_chamber(c, -1));
    return up.kind == heart_kind::algebraic && up.shift == 0 && up.path.empty() &&
           dn.kind == heart_kind::algebraic && dn.shift == -1;
  });
  std::size_t models = 0;
  s.prop("models_distinct", [&] {
    std::vector<movable_cone> fan = movable_fan(c, cap);
    models = fan.size();
    std::set<std::string> names;
    for (const movable_cone& mc : fan) names.insert(mc.model);
    return names.size() == fan.size();
  });
  s.prop("covers_carry_primitive_bricks", [&] {
    chamber p = principal_chamber(c, 1);
    for (int l : p.labels) {
      chamber nb = wall_cross(c, p, l);
      if (!chamber_leq(c, p, nb)) continue;
      brick_class bc = brick_label(c, p, nb);
      if (bc.imaginary) return false;
      if (content(bc.cls) != 1) return false;
    }
    return true;
  });
  s.prop("twist_fixes_delta", [&] {
    ivec delta = delta_restricted(c);
    std::vector<int> fw = c.finite_walls();
    for (size_t j = 0; j < fw.size(); ++j) {
      std::vector<i64> deg(fw.size(), 0);
      deg[j] = 1;
      if (pic_action_on_class(c, {}, deg, delta) != delta) return false;
    }
    return true;
  });
  s.detail("models", std::to_string(models));
  return s.res;
}

} // namespace

check_report run_check(const context& c, int box, std::size_t cap, bool inject_fault) {
  if (box < 1) throw config_error("box level must be at least 1");
  check_report r;
  r.diagram = c.d.name();
  r.marked = c.marked;
  r.box = box;
  r.fault = inject_fault;

  diagram d = c.d;
  if (inject_fault) {
    bool done = false;
    for (int i = 0; i < d.n_vertices() && !done; ++i)
      for (int j = 0; j < d.n_vertices() && !done; ++j)
        if (i != j && d.cartan.at(i, j) != 0) {
          d.cartan.at(i, j) = -d.cartan.at(i, j);
          done = true;
        }
  }

  r.suites.push_back(suite_diagram(d));
  r.suites.push_back(suite_root_lattice(c));
  r.suites.push_back(suite_mutation(c, cap));
  r.suites.push_back(suite_arrangement(c, box, cap));
  r.suites.push_back(suite_hearts(c, cap));

  for (const suite_result& s : r.suites)
    if (!s.pass) {
      r.pass = false;
      r.failed_property = s.name + ":" + s.failed_property;
      break;
    }
  return r;
}

std::string json_check_report(const check_report& r) {
  nlohmann::ordered_json j;
  j["diagram"] = r.diagram;
  j["marked"] = r.marked;
  j["box"] = r.box;
  j["fault_injected"] = r.fault;
  j["status"] = r.pass ? "pass" : "fail";
  if (!r.pass) j["failed_property"] = r.failed_property;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const suite_result& s : r.suites) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    e["status"] = s.pass ? "pass" : "fail";
    if (!s.pass) e["failed_property"] = s.failed_property;
    nlohmann::ordered_json det;
    for (const auto& [k, v] : s.details) det[k] = v;
    e["details"] = det;
    suites.push_back(e);
  }
  j["suites"] = suites;
  return j.dump(2) + "\n";
}

} // namespace flopcomb
