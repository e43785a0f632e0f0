#pragma once

// Upper bounds on the minimum distance of binary linear codes.
//
// Everything that decides a verdict is computed with exact integers
// (boost::multiprecision::cpp_int). Only the entropy form of the Hamming
// bound works in floating point.

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace z2cb {

using BigInt = boost::multiprecision::cpp_int;

/// Slack used whenever a floating-point inequality decides a verdict.
inline constexpr double kFloatSlack = 1e-9;

/// Binomial coefficient C(n, i); zero outside 0 <= i <= n.
BigInt binomial(int n, int i);
/// 2^e as a big integer.
BigInt pow2(int e);

/// Binary entropy H(eps) = -eps log2 eps - (1-eps) log2 (1-eps), H(0) = H(1) = 0.
double entropy(double eps);

/// Volume of a Hamming ball: sum_{i<=t} C(m, i).
BigInt ball_volume(int m, int t);

/// Largest k with 2^k * V(n, floor((d-1)/2)) <= 2^n.
int sphere_packing_max_k(int n, int d);

struct EntropyParams {
  int m = 0;
  int d = 0;
  int t = 0;
  double epsilon = 0.0;
  double h_eps = 0.0;
};

EntropyParams entropy_params(int m, int d);

/// (1 - H(eps)) m + 1/2 log2(2m) with eps = floor((d-1)/2) / m. Requires
/// 3 <= d <= m; smaller d makes eps zero and throws kEpsilonZero.
double entropy_bound_rhs(int m, int d);

int singleton_max_d(int n, int k);
/// Largest d with sum_{i<k} ceil(d / 2^i) <= n.
int griesmer_max_d(int n, int k);
/// Largest d allowed by Plotkin's bound; only values d > n/2 are constrained.
int plotkin_max_d(int n, int k);
/// Largest d whose sphere-packing test admits dimension k. For even d the
/// test is also applied to the punctured parameters (n-1, d-1).
int sphere_packing_max_d(int n, int k);

struct BoundReport {
  int n = 0;
  int k = 0;
  std::map<std::string, int> per_bound;  // sphere_packing, singleton, plotkin, griesmer
  int combined = 0;
  std::string binding;  // name of a bound attaining `combined`
};

BoundReport combined_upper_bound(int n, int k);

}  // namespace z2cb
