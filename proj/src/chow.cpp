#include "spohn/chow.hpp"

#include <stdexcept>

namespace spohn {

ChowClass::ChowClass(std::vector<int> partition_sizes) : sizes_(std::move(partition_sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("empty partition");
  long total = 1;
  for (int s : sizes_) {
    if (s < 1 || s > 16) throw std::invalid_argument("partition block size out of range");
    bounds_.push_back(1L << s);
    total *= 1L << s;
  }
  coef_.assign(total, Integer(0));
}

ChowClass ChowClass::zero(std::vector<int> sizes) { return ChowClass(std::move(sizes)); }

ChowClass ChowClass::constant(std::vector<int> sizes, const Integer& c) {
  ChowClass r(std::move(sizes));
  r.coef_[0] = c;
  return r;
}

ChowClass ChowClass::variable(std::vector<int> sizes, int i) {
  ChowClass r(std::move(sizes));
  if (i < 0 || i >= static_cast<int>(r.sizes_.size()))
    throw std::invalid_argument("variable index out of range");
  std::vector<long> e(r.sizes_.size(), 0);
  e[i] = 1;
  r.coef_[r.flat(e)] = 1;
  return r;
}

long ChowClass::flat(const std::vector<long>& exps) const {
  if (exps.size() != bounds_.size()) throw std::invalid_argument("exponent arity mismatch");
  long idx = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] >= bounds_[i]) throw std::out_of_range("exponent beyond truncation");
    idx = idx * bounds_[i] + exps[i];
  }
  return idx;
}

Integer ChowClass::coefficient(const std::vector<long>& exps) const { return coef_[flat(exps)]; }

void ChowClass::set_coefficient(const std::vector<long>& exps, const Integer& c) {
  coef_[flat(exps)] = c;
}

void ChowClass::check_compatible(const ChowClass& o) const {
  if (sizes_ != o.sizes_) throw std::invalid_argument("Chow classes over different partitions");
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  check_compatible(o);
  ChowClass r(sizes_);
  for (size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] + o.coef_[i];
  return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  check_compatible(o);
  ChowClass r(sizes_);
  size_t k = sizes_.size();
  std::vector<long> ea(k), eb(k);
  for (size_t a = 0; a < coef_.size(); ++a) {
    if (coef_[a] == 0) continue;
    long rest = static_cast<long>(a);
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
      ea[i] = rest % bounds_[i];
      rest /= bounds_[i];
    }
    for (size_t b = 0; b < o.coef_.size(); ++b) {
      if (o.coef_[b] == 0) continue;
      rest = static_cast<long>(b);
      bool truncated = false;
      long idx = 0;
      for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
        eb[i] = rest % bounds_[i];
        rest /= bounds_[i];
      }
      for (size_t i = 0; i < k; ++i) {
        long e = ea[i] + eb[i];
        if (e >= bounds_[i]) {
          truncated = true;
          break;
        }
        idx = idx * bounds_[i] + e;
      }
      if (!truncated) r.coef_[idx] += coef_[a] * o.coef_[b];
    }
  }
  return r;
}

ChowClass ChowClass::pow(long k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  ChowClass r = constant(sizes_, 1);
  ChowClass base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool ChowClass::operator==(const ChowClass& o) const {
  return sizes_ == o.sizes_ && coef_ == o.coef_;
}

Integer nash_ci_degree(const Partition& part) {
  std::vector<int> sizes = part.sizes();
  int k = static_cast<int>(sizes.size());
  int n = part.player_count();
  long sum_pow = 0;
  for (int s : sizes) sum_pow += 1L << s;
  if (sum_pow - k - n < 0)
    throw std::domain_error("negative expected dimension: the Nash CI variety is empty");

  ChowClass h = ChowClass::zero(sizes);
  for (int i = 0; i < k; ++i) h = h + ChowClass::variable(sizes, i);

  ChowClass acc = h.pow(sum_pow - n - k);
  for (int b = 0; b < k; ++b) {
    ChowClass factor = h;
    ChowClass xb = ChowClass::variable(sizes, b);
    if (sizes[b] == 1) {
      // (sum x_i) - x_b
      ChowClass neg = ChowClass::zero(sizes);
      std::vector<long> e(sizes.size(), 0);
      e[b] = 1;
      neg.set_coefficient(e, Integer(-1));
      factor = factor + neg;
    } else {
      factor = factor + xb;
    }
    acc = acc * factor.pow(sizes[b]);
  }

  std::vector<long> top(sizes.size());
  for (int i = 0; i < k; ++i) top[i] = (1L << sizes[i]) - 1;
  return acc.coefficient(top);
}

std::vector<long> canonical_multidegree(const Partition& part) {
  std::vector<int> sizes = part.sizes();
  int n = part.player_count();
  std::vector<long> out;
  for (int s : sizes) out.push_back(n + s * (1 - 2 * (s == 1 ? 1 : 0)) - (1L << s));
  return out;
}

bool is_general_type_surface(const Partition& part) {
  long sum_pow = 0;
  for (int s : part.sizes()) sum_pow += 1L << s;
  long dim = sum_pow - static_cast<long>(part.blocks.size()) - part.player_count();
  if (dim != 2) throw std::domain_error("partition does not define a Nash CI surface");
  for (long d : canonical_multidegree(part))
    if (d <= 0) return false;
  return true;
}

}  // namespace spohn
