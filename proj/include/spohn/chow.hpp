#ifndef SPOHN_CHOW_HPP
#define SPOHN_CHOW_HPP

#include <vector>

#include "spohn/graph.hpp"
#include "spohn/polyring.hpp"

namespace spohn {

// Element of Z[x_1..x_k] / <x_i^(2^n_i)>, stored densely over the mixed-radix
// exponent box; terms at or beyond the truncation bound are dropped by every
// operation.
class ChowClass {
 public:
  explicit ChowClass(std::vector<int> partition_sizes);

  static ChowClass zero(std::vector<int> sizes);
  static ChowClass constant(std::vector<int> sizes, const Integer& c);
  static ChowClass variable(std::vector<int> sizes, int i);  // x_i, 0-based

  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<long>& bounds() const { return bounds_; }  // 2^{n_i} per factor

  Integer coefficient(const std::vector<long>& exps) const;
  void set_coefficient(const std::vector<long>& exps, const Integer& c);

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass pow(long k) const;
  bool operator==(const ChowClass& o) const;

 private:
  std::vector<int> sizes_;
  std::vector<long> bounds_;
  std::vector<Integer> coef_;  // mixed-radix dense

  long flat(const std::vector<long>& exps) const;
  void check_compatible(const ChowClass& o) const;
};

// Degree of the Nash CI variety of the partition: coefficient of
// x_1^(2^{n_1}-1) ... x_k^(2^{n_k}-1) in
// (sum x_i)^(sum 2^{n_i} - n - k) * prod_b (sum x_i + (-1)^{[n_b=1]} x_b)^{n_b},
// computed in the truncated ring.
Integer nash_ci_degree(const Partition& part);

// Entries n + n_i (1 - 2*[n_i=1]) - 2^{n_i} of the canonical bundle twist.
std::vector<long> canonical_multidegree(const Partition& part);

// For partitions with expected dimension 2: true iff every canonical
// multidegree entry is strictly positive (ampleness of the canonical bundle).
bool is_general_type_surface(const Partition& part);

}  // namespace spohn

#endif
