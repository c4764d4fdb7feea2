// Scalar confluent hypergeometric (Kummer) functions 1F1(1/2,1,z) and
// 1F1(3/2,2,z) for non-positive argument.
//
// Direct summation of the Kummer series is unusable for large negative z
// (catastrophic cancellation), so both functions are evaluated through
// modified-Bessel identities with the exponential prefactor folded into
// exponentially scaled forms:
//
//   1F1(1/2, 1, z) = e^(z/2) I0(z/2)
//   1F1(3/2, 2, z) = e^(z/2) (I0(z/2) + I1(z/2))
//
// The scaled Bessel functions use the power series for small argument and
// the standard large-argument asymptotic expansion beyond, which keeps the
// relative error near machine precision over z in [-1e6, 0].

#ifndef BINGHAM_SPECFUN_HPP_
#define BINGHAM_SPECFUN_HPP_

namespace bingham {

// 1F1(1/2, 1, z). Accepts z <= 1 (the slightly positive range exists so
// finite-difference checks at z near 0 stay in-domain).
// Throws std::domain_error for non-finite z or z > 1.
double kummer_half_one(double z);

// 1F1(3/2, 2, z). Same domain and error behavior as kummer_half_one.
double kummer_threehalves_two(double z);

} // namespace bingham

#endif
