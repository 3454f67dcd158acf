#pragma once

#include <cstdint>
#include <random>

namespace fracx {

// Identical (seed, stream) reproduces identical draws, bit for bit.  Streams
// let batches be generated independently from one logical seed.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// mt19937_64 engine with self-implemented transforms (polar normal,
// Marsaglia-Tsang gamma), so draw sequences are identical across platforms
// and standard-library versions.
class Rng {
 public:
  explicit Rng(RngState s);

  std::uint64_t next_u64() { return eng_(); }
  double uniform();      // strictly inside (0,1)
  double exponential();  // unit rate
  double normal();       // standard
  double gamma(double shape);  // unit scale, shape > 0
  double beta(double a, double b);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0;
};

}  // namespace fracx
