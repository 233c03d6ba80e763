#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mcgcert/batch.hpp"
#include "mcgcert/garside.hpp"

using namespace mcgcert;

namespace {

double run_ms(const std::function<std::vector<std::size_t>()>& f,
              std::vector<std::size_t>& result) {
  auto t0 = std::chrono::steady_clock::now();
  result = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && argv[1][0] == '-') {
    std::printf("usage: mcgcert_bench [count] [word-length]\n");
    return 0;
  }
  std::size_t count = argc > 1 ? std::stoull(argv[1]) : 2000;
  int len = argc > 2 ? std::stoi(argv[2]) : 40;

  CoxeterSystem sys = CoxeterSystem::type_a(5);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> atom(0, sys.rank() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Word> words(count);
  for (Word& w : words)
    for (int i = 0; i < len; ++i)
      w.push_back({sys.atom_names()[atom(rng)], sign(rng) ? 1 : -1});

  auto pred = [&](std::size_t i) {
    GarsideElement g = normal_form(sys, words[i]);
    return g.inf != 0 || !g.factors.empty();  // trivial words land in the failing list
  };

  std::vector<std::size_t> serial, parallel;
  double ms_serial =
      run_ms([&] { return failing_indices_serial(count, pred); }, serial);
  double ms_parallel = run_ms([&] { return failing_indices(count, pred); }, parallel);

  std::printf("normal forms: %zu words of length %d in B5\n", count, len);
  std::printf("serial:   %8.1f ms\n", ms_serial);
  std::printf("parallel: %8.1f ms\n", ms_parallel);
  std::printf("speedup:  %8.2fx\n", ms_serial / ms_parallel);
  std::printf("agree: %s (%zu trivial)\n", serial == parallel ? "yes" : "NO",
               serial.size());
  return serial == parallel ? 0 : 1;
}
