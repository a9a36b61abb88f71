#ifndef NONNEG_NONNEG_HPP
#define NONNEG_NONNEG_HPP

#include "nonneg/errors.hpp"
#include "nonneg/scalar.hpp"
#include "nonneg/rational.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/subspace.hpp"
#include "nonneg/jacobi.hpp"
#include "nonneg/feasibility.hpp"
#include "nonneg/alternative.hpp"
#include "nonneg/spectral.hpp"

#endif  // NONNEG_NONNEG_HPP
