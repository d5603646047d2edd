#ifndef BALLPROLATE_BALLPROLATE_HPP
#define BALLPROLATE_BALLPROLATE_HPP

#include "approx.hpp"
#include "ballpoly.hpp"
#include "harmonics.hpp"
#include "io.hpp"
#include "prolate.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "specfun.hpp"
#include "spectra.hpp"
#include "tridiagonal.hpp"

#endif  // BALLPROLATE_BALLPROLATE_HPP
