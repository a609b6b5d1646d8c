#include "zhou/lift.hpp"

#include <string>

#include "zhou/error.hpp"

namespace zhou {

namespace {

// e with modulus == p^e; throws if modulus is not a power of p.
unsigned prime_power_exponent(u64 modulus, u64 p) {
  unsigned e = 0;
  u64 m = modulus;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1 || e == 0)
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not a power of " + std::to_string(p));
  return e;
}

}  // namespace

int lift_iterations(unsigned exponent) {
  int rounds = 0;
  for (unsigned reach = 1; reach < exponent; reach *= 2) ++rounds;
  return rounds + 1;
}

MatZ lift_idempotent(const MatZ& e0, const LiftObserver& observe) {
  const unsigned k = prime_power_exponent(e0.modulus(), 2);
  if (!is_idempotent(e0.reduce(2))) throw NotApproxIdempotent("input is not idempotent modulo 2");

  MatZ e = e0;
  const int rounds = lift_iterations(k);
  for (int i = 1; i <= rounds; ++i) {
    const MatZ sq = e * e;
    const MatZ cube = sq * e;
    e = mat_scale(sq, 3) - mat_scale(cube, 2);
    if (observe) observe(i, e);
  }
  if (!is_idempotent(e)) throw std::logic_error("lift_idempotent: iteration did not converge");
  return e;
}

MatZ lift_tripotent(const MatZ& t0, u64 p, const LiftObserver& observe) {
  if (p % 2 == 0) throw std::invalid_argument("tripotent lifting needs an odd prime");
  const unsigned e = prime_power_exponent(t0.modulus(), p);
  if (!is_tripotent(t0.reduce(p)))
    throw NotApproxTripotent("input is not tripotent modulo " + std::to_string(p));

  const MatZ id = MatZ::identity(t0.modulus(), t0.dim());
  MatZ t = t0;
  const int rounds = lift_iterations(e);
  for (int i = 1; i <= rounds; ++i) {
    const MatZ sq = t * t;
    const MatZ defect = sq * t - t;
    MatZ jac_inv(t.modulus(), t.dim());
    try {
      jac_inv = invert_unit_matrix(mat_scale(sq, 3) - id);
    } catch (const NotAUnit&) {
      throw JacobianNotUnit("3T^2 - I is singular modulo " + std::to_string(p));
    }
    t = t - jac_inv * defect;
    if (observe) observe(i, t);
  }
  if (!is_tripotent(t)) throw std::logic_error("lift_tripotent: iteration did not converge");
  return t;
}

}  // namespace zhou
