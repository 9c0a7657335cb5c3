#pragma once

#include <cmath>
#include <complex>

namespace zetagap {

// Neumaier's variant of Kahan summation. Order-dependent by nature: callers
// that need reproducibility across partitions must add in a fixed order.
template <typename T>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(T initial) : sum_(initial) {}

  constexpr void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }

  constexpr T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <typename T>
class CompensatedSum<std::complex<T>> {
 public:
  void add(std::complex<T> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedSum& operator+=(std::complex<T> z) {
    add(z);
    return *this;
  }
  std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<T> re_;
  CompensatedSum<T> im_;
};

}  // namespace zetagap
