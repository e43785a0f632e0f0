#include "z2cb/bounds.hpp"

#include <cmath>

#include "z2cb/error.hpp"

namespace z2cb {

namespace {

void check_nk(int n, int k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

// ceil(log2 v) for v >= 1.
int ceil_log2(const BigInt& v) {
  if (v <= 1) return 0;
  const BigInt below = v - 1;
  return static_cast<int>(boost::multiprecision::msb(below)) + 1;
}

}  // namespace

BigInt binomial(int n, int i) {
  if (n < 0 || i < 0 || i > n) return 0;
  if (i > n - i) i = n - i;
  BigInt c = 1;
  for (int j = 1; j <= i; ++j) {
    c *= n - i + j;
    c /= j;
  }
  return c;
}

BigInt pow2(int e) {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  BigInt v = 1;
  v <<= e;
  return v;
}

double entropy(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "entropy argument outside [0, 1]");
  }
  if (eps == 0.0 || eps == 1.0) return 0.0;
  return -eps * std::log2(eps) - (1.0 - eps) * std::log2(1.0 - eps);
}

BigInt ball_volume(int m, int t) {
  if (m < 0 || t < 0 || t > m) {
    throw Error(ErrorCode::kOutOfRange,
                "ball radius " + std::to_string(t) + " for length " + std::to_string(m));
  }
  BigInt total = 0;
  BigInt c = 1;  // C(m, 0)
  for (int i = 0; i <= t; ++i) {
    total += c;
    c = c * (m - i) / (i + 1);
  }
  return total;
}

int sphere_packing_max_k(int n, int d) {
  if (d < 1 || d > n) {
    throw Error(ErrorCode::kOutOfRange, "need 1 <= d <= n, got n=" + std::to_string(n) +
                                            " d=" + std::to_string(d));
  }
  // 2^k V <= 2^n  <=>  n - k >= ceil(log2 V)
  return n - ceil_log2(ball_volume(n, (d - 1) / 2));
}

EntropyParams entropy_params(int m, int d) {
  if (d < 3) throw Error(ErrorCode::kEpsilonZero, "d < 3 gives epsilon = 0");
  if (d > m) throw Error(ErrorCode::kOutOfRange, "need d <= m");
  EntropyParams p;
  p.m = m;
  p.d = d;
  p.t = (d - 1) / 2;
  p.epsilon = static_cast<double>(p.t) / m;
  p.h_eps = entropy(p.epsilon);
  return p;
}

double entropy_bound_rhs(int m, int d) {
  const EntropyParams p = entropy_params(m, d);
  return (1.0 - p.h_eps) * m + 0.5 * std::log2(2.0 * m);
}

int singleton_max_d(int n, int k) {
  check_nk(n, k);
  return n - k + 1;
}

int griesmer_max_d(int n, int k) {
  check_nk(n, k);
  auto length_needed = [k](int d) {
    long total = 0;
    for (int i = 0; i < k; ++i) {
      // ceil(d / 2^i); once 2^i >= d every remaining term is 1.
      if (i >= 30) {
        total += k - i;
        break;
      }
      const long p = 1L << i;
      total += (d + p - 1) / p;
    }
    return total;
  };
  int d = 1;
  while (d < n && length_needed(d + 1) <= n) ++d;
  return d;
}

int plotkin_max_d(int n, int k) {
  check_nk(n, k);
  // For 2d > n: 2^k <= 2 floor(d / (2d - n)). Feasibility is monotone in d.
  auto feasible = [n, k](int d) {
    if (2 * d <= n) return true;
    const int rhs = 2 * (d / (2 * d - n));
    if (k >= 30) return false;
    return (1L << k) <= rhs;
  };
  int d = n;
  while (d > 1 && !feasible(d)) --d;
  return d;
}

int sphere_packing_max_d(int n, int k) {
  check_nk(n, k);
  auto feasible = [n, k](int d) {
    if (sphere_packing_max_k(n, d) < k) return false;
    // An [n,k,d] code with d even punctures to an [n-1,k,d-1] code.
    if (d % 2 == 0 && d >= 2 && n >= 2 && d - 1 <= n - 1) {
      if (sphere_packing_max_k(n - 1, d - 1) < k) return false;
    }
    return true;
  };
  int d = n;
  while (d > 1 && !feasible(d)) --d;
  return d;
}

BoundReport combined_upper_bound(int n, int k) {
  check_nk(n, k);
  BoundReport r;
  r.n = n;
  r.k = k;
  r.per_bound["sphere_packing"] = sphere_packing_max_d(n, k);
  r.per_bound["singleton"] = singleton_max_d(n, k);
  r.per_bound["plotkin"] = plotkin_max_d(n, k);
  r.per_bound["griesmer"] = griesmer_max_d(n, k);
  r.combined = n + 1;
  for (const char* name : {"sphere_packing", "singleton", "plotkin", "griesmer"}) {
    const int v = r.per_bound.at(name);
    if (v < r.combined) {
      r.combined = v;
      r.binding = name;
    }
  }
  return r;
}

}  // namespace z2cb
