#pragma once

#include "starmat/phase_poly.hpp"

namespace starmat {

/// Weyl-ordered (Moyal) star product f *_h g for any number of (x,p) pairs.
/// On the plane it is the binomial bidifferential sum
///   sum_m h^m/(2^m m!) sum_k C(m,k) (-1)^k
///       (d^m f / dx^(m-k) dp^k) (d^m g / dx^k dp^(m-k));
/// for n pairs it is the expansion of
///   exp( sum_a (h/2) (d_{x_a} (x) d_{p_a} - d_{p_a} (x) d_{x_a}) ),
/// the first factor of each bidifferential term acting on f. Both sums are
/// finite on polynomials.
PhasePoly moyal_product(const PhasePoly& f, const PhasePoly& g);

/// The n = 1 binomial specialization, exposed so it can be checked against
/// the general expansion term for term.
PhasePoly moyal_product_plane(const PhasePoly& f, const PhasePoly& g);

/// The general multinomial expansion, valid for any n (including 1).
PhasePoly moyal_product_general(const PhasePoly& f, const PhasePoly& g);

/// Standard-ordered star product, plane only:
///   sum_m h^m/m! (d^m f/dx^m)(d^m g/dp^m).
PhasePoly standard_product(const PhasePoly& f, const PhasePoly& g);

/// f *_h g - g *_h f.
PhasePoly moyal_commutator(const PhasePoly& f, const PhasePoly& g);

/// {f,g} = sum_a (df/dx_a dg/dp_a - df/dp_a dg/dx_a).
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

/// The gauge operator exp(+(h/2) d^2/dxdp) carrying the Moyal product to the
/// standard-ordered one, and its inverse. Plane only.
PhasePoly gauge_to_standard(const PhasePoly& f);
PhasePoly gauge_to_moyal(const PhasePoly& f);

}  // namespace starmat
