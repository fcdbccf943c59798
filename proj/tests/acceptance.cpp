#include <cstdlib>
#include <iostream>

#include "motivelab/selftest.hpp"

int main(int argc, char** argv) {
  motivelab::selftest::Options opt;
  opt.golden_dir = MOTIVELAB_SOURCE_DIR "/tests/golden";
  opt.dataset_dir = MOTIVELAB_SOURCE_DIR "/datasets";
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& r : motivelab::selftest::run_all(opt)) {
    std::cout << motivelab::selftest::format_line(r) << "\n";
    failed += r.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
