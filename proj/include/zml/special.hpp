#pragma once
// Special functions: principal-branch E1, complex log-gamma, Barnes G.

#include "zml/common.hpp"

namespace zml::special {

// Principal-branch exponential integral E_1(z).  Power series for |z| <= 4,
// modified-Lentz continued fraction beyond.  Rejects z = 0 and arg z = +-pi.
cplx exp_integral_e1(cplx z);

// E_1(z) + log z + gamma: the entire part, cancellation-free near 0.
cplx e1_entire_part(cplx z);

// principal log Gamma(z), Lanczos.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// Barnes G; exact 0 at non-positive integers, functional-equation shift to
// |z| >= 20 plus the asymptotic series elsewhere.  ~1e-10 or better.
cplx barnes_g(cplx z);

}  // namespace zml::special
