#pragma once

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/identities.hpp"

namespace hc {

bool is_cocommutative(const Hopf& H);

// Coinvariant dimensions, stability of the operator families on Omega^R, Omega^L and the
// sigma-coinvariants of the calculus twisted by delta o S, and left = right when cocommutative.
// The Omega^R and Omega^L stability rows are supplementary unless S^2 = id.
IdentityReport verify_frames(const Hopf& H, const Character& delta, const Element& sigma, int N);

// kappa', kappa'_xi and b', b'_xi in (ker eps)^{(x)n} coordinates (the untwisted rows only when S^2 = id), and the left action on
// Omega_n = (ker eps)^{(x)n} (x) H.
IdentityReport verify_coordinates(const Hopf& H, const Character& delta, const Element& sigma, int N);

// P^2 = P, P kappa = kappa P, (kappa - 1)^2 P = 0 and, on image(P), B' = (n+1) d, b' = -b,
// sum kappa'^j b' = n b'. Untwisted calculus, 1 <= n, n + 1 <= available grades.
IdentityReport verify_harmonic(Calculus& C, int n);

// S maps Omega^L_n onto Omega^R_n; when S^2 = id the signs of S b = +-b' S and
// S kappa = +-kappa' S are recorded.
IdentityReport verify_antipode(Calculus& C, int n);

}  // namespace hc
