#include "wgram/numeric.hpp"

#include <cmath>

namespace wgram {

double log_of(const Int& x) {
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(std::abs(d)) + double(exp2) * 0.69314718055994530942;
}

double log_of(const Rat& x) {
  return log_of(Int(x.get_num())) - log_of(Int(x.get_den()));
}

std::uint32_t PrimeSchedule::next() {
  if (small_phase_) {
    Int p = next_;
    while (p >= 2 && !is_probable_prime(p)) --p;
    if (p >= 2) {
      next_ = p - 1;
      return std::uint32_t(p.get_ui());
    }
    small_phase_ = false;
    next_ = 65536;
  }
  next_ = next_prime_above(next_);
  return std::uint32_t(next_.get_ui());
}

}  // namespace wgram
