#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "polyberg/gammaseq.hpp"
#include "polyberg/parallel.hpp"

using namespace polyberg;

TEST(Parallel, EnvironmentCap) {
  setenv("POLYBERG_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  setenv("POLYBERG_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("POLYBERG_THREADS");
}

TEST(Parallel, CoversRangeAndPropagatesErrors) {
  setenv("POLYBERG_THREADS", "4", 1);
  std::vector<int> hit(100, 0);
  parallel_for(0, 100, [&](int i) { hit[i] += 1; });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(0, 10, [](int i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
  unsetenv("POLYBERG_THREADS");
}

TEST(Parallel, SequenceIndependentOfWorkerCount) {
  setenv("POLYBERG_THREADS", "1", 1);
  const auto a = gamma_sequence<double>(Symbol::indicator(0.6), 3, 1.5, 20);
  setenv("POLYBERG_THREADS", "8", 1);
  const auto b = gamma_sequence<double>(Symbol::indicator(0.6), 3, 1.5, 20);
  unsetenv("POLYBERG_THREADS");
  for (int xi = -2; xi <= 20; ++xi) EXPECT_TRUE(a[xi] == b[xi]);
}
