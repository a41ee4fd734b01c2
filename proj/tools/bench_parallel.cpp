#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flopcomb/arrangement.hpp"

// wall clock comparison of the serial reference kernels against the parallel
// entry points, and a cross check that both produce identical output.
// usage: bench_parallel [diagram] [box]   (defaults: D4~ 1)

using namespace flopcomb;

namespace {

template <typename F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_chambers(const std::vector<chamber>& a, const std::vector<chamber>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (chamber_key(a[k]) != chamber_key(b[k]) || a[k].path != b[k].path) return false;
  return true;
}

} // namespace

int main(int argc, char** argv) {
  std::string name = argc > 1 ? argv[1] : "D4~";
  int box = argc > 2 ? std::atoi(argv[2]) : 1;
  context c = make_context(name, {});

#ifdef _OPENMP
  std::printf("openmp on, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp, parallel entry points run serially\n");
#endif

  std::vector<chamber> es, ep;
  double t_es = time_of([&] { es = enumerate_box_serial(c, 1, box, 2000000); });
  double t_ep = time_of([&] { ep = enumerate_box(c, 1, box, 2000000); });
  std::printf("enumerate %s box %d      %6zu chambers  serial %7.3fs  parallel %7.3fs  identical %s\n",
              name.c_str(), box, es.size(), t_es, t_ep, same_chambers(es, ep) ? "yes" : "NO");

  std::vector<chamber> zs, zp;
  double t_zs = time_of([&] { zs = enumerate_sector0_serial(c, 2000000); });
  double t_zp = time_of([&] { zp = enumerate_sector0(c, 2000000); });
  std::printf("enumerate %s sector 0   %6zu chambers  serial %7.3fs  parallel %7.3fs  identical %s\n",
              name.c_str(), zs.size(), t_zs, t_zp, same_chambers(zs, zp) ? "yes" : "NO");

  std::vector<fan_member> mem = fan_members_of_chambers(c, es, true);
  bool ok_s = false, ok_p = false;
  double t_vs = time_of([&] { ok_s = verify_fan_serial(c, mem, nullptr); });
  double t_vp = time_of([&] { ok_p = verify_fan(c, mem, nullptr); });
  std::printf("verify fan %6zu members              serial %7.3fs  parallel %7.3fs  verdicts %s/%s\n",
              mem.size(), t_vs, t_vp, ok_s ? "ok" : "fail", ok_p ? "ok" : "fail");
  return ok_s && ok_p && same_chambers(es, ep) && same_chambers(zs, zp) ? 0 : 1;
}
