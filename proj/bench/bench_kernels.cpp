// Serial reference vs OpenMP kernels on the quadrature-heavy paths.
//
//   jackprod_bench [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "jackprod/bessel.hpp"
#include "jackprod/harness.hpp"
#include "jackprod/jack.hpp"
#include "jackprod/kernels.hpp"

using namespace jackprod;

template <class F>
double time_ms(int repeats, F&& f) {
  auto start = std::chrono::high_resolution_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  auto end = std::chrono::high_resolution_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count() / repeats;
}

void report(const char* name, double serial_ms, double parallel_ms, double serial_value, double parallel_value) {
  std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms << " ms, speedup "
            << serial_ms / parallel_ms << (serial_value == parallel_value ? ", identical" : ", MISMATCH") << "\n";
}

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads: " << kernels::max_threads() << "\n";

  const Multiplicity kappa(Rational(4, 5), Rational(13, 10));
  const Pair x{0.6, 0.2};
  const Pair y{0.4, 0.1};
  const double order = kappa.order_mu() - 1.0;
  double vs = 0, vp = 0;
  double ts = time_ms(repeats, [&] { vs = bessel_b2_theorem3(kappa, x, y, 256, 256, order, false); });
  double tp = time_ms(repeats, [&] { vp = bessel_b2_theorem3(kappa, x, y, 256, 256, order, true); });
  report("double integral 256x256", ts, tp, vs, vp);

  const Partition lambda{4, 2};
  const double xs[] = {0.3, 1.1, 2.6};
  ts = time_ms(repeats, [&] { vs = jack_recursion_lift(lambda, 1.5, xs, {.npoints = 200, .parallel = false}); });
  tp = time_ms(repeats, [&] { vp = jack_recursion_lift(lambda, 1.5, xs, {.npoints = 200, .parallel = true}); });
  report("recursion lift n=3, 200x200", ts, tp, vs, vp);

  harness::SweepConfig cfg;
  cfg.samples = 20;
  cfg.parallel = false;
  std::size_t ns = 0, np = 0;
  ts = time_ms(repeats, [&] { ns = harness::sweep_product(cfg).size(); });
  cfg.parallel = true;
  tp = time_ms(repeats, [&] { np = harness::sweep_product(cfg).size(); });
  report("product sweep", ts, tp, static_cast<double>(ns), static_cast<double>(np));
  return 0;
}
