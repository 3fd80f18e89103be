#ifndef NK_NK_HPP
#define NK_NK_HPP

#include "nk/asymptotic.hpp"
#include "nk/correlations.hpp"
#include "nk/error.hpp"
#include "nk/euler_maclaurin.hpp"
#include "nk/fit.hpp"
#include "nk/kernel_exact.hpp"
#include "nk/radial_sampler.hpp"
#include "nk/saddle.hpp"
#include "nk/scaled_complex.hpp"
#include "nk/specfun.hpp"
#include "nk/taylor_a2.hpp"

#endif  // NK_NK_HPP
