#include "wgram/rational_recovery.hpp"

namespace wgram {
namespace {

Int norm2(const std::pair<Int, Int>& v) { return v.first * v.first + v.second * v.second; }

Int dot(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
  return a.first * b.first + a.second * b.second;
}

// q = round(n / d) toward the numerically smallest residue, d > 0.
Int round_quotient(const Int& n, const Int& d) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r > d) q += 1;
  return q;
}

}  // namespace

std::pair<Int, Int> gauss_reduce(LatticeBasis2 basis, const std::optional<Int>& early_bound) {
  auto& u = basis.v1;
  auto& w = basis.v2;
  if ((u.first == 0 && u.second == 0) || (w.first == 0 && w.second == 0))
    throw std::domain_error("gauss_reduce: degenerate basis");

  Int nu = norm2(u), nw = norm2(w), d = dot(u, w);
  if (nu < nw) {
    std::swap(u, w);
    std::swap(nu, nw);
  }
  if (early_bound && nw < *early_bound) return w;

  // Invariant: |u| >= |w|. Reduce u against w until no further shortening;
  // norms and the inner product are updated incrementally.
  while (true) {
    Int q = round_quotient(d, nw);
    if (q != 0) {
      u.first -= q * w.first;
      u.second -= q * w.second;
      nu += q * (q * nw - 2 * d);
      d -= q * nw;
    }
    if (nu == 0) throw std::domain_error("gauss_reduce: degenerate basis");
    if (early_bound && nu < *early_bound) return u;
    if (nu >= nw) break;
    std::swap(u, w);
    std::swap(nu, nw);
  }
  return w;
}

std::optional<RecoveredRational> recover_rational(const Residue& r) {
  if (r.rep == 0) return RecoveredRational{0, 1};

  auto v = gauss_reduce(LatticeBasis2::congruence(r.rep, r.modulus), r.modulus);
  Int x = v.first, y = v.second;
  if (x * x + y * y >= r.modulus) return std::nullopt;
  if (x == 0) return std::nullopt;  // [0, kb] never has norm^2 < b
  if (gcd(x, y) != 1) return std::nullopt;
  if (x < 0) {
    x = -x;
    y = -y;
  }
  return RecoveredRational{y, x};
}

}  // namespace wgram
