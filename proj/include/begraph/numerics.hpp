#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace begraph {

// Kahan-Babuska-Neumaier compensated accumulator. Moment sums add many terms
// of wildly different magnitude; the correction keeps them exact to ~1 ulp.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// n! / (n-l)! as a double (number of ordered l-tuples of distinct indices).
inline double falling_factorial(std::uint64_t n, std::uint64_t l) {
  double r = 1.0;
  for (std::uint64_t i = 0; i < l; ++i) r *= double(n - i);
  return r;
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

// Runs fn(begin, end) over [0, n) split into `threads` contiguous chunks.
// Chunk boundaries do not affect results anywhere this is used: all consumers
// address their work purely by index.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (n + threads - 1) / threads;
  for (std::size_t a = 0; a < n; a += step) {
    const std::size_t b = std::min(n, a + step);
    pool.emplace_back(fn, a, b);
  }
  for (auto& t : pool) t.join();
}

}  // namespace begraph
