#ifndef HHPAINLEVE_HHPAINLEVE_HPP
#define HHPAINLEVE_HHPAINLEVE_HPP

#include "hhpainleve/errors.hpp"
#include "hhpainleve/laurent_poly.hpp"
#include "hhpainleve/numeric.hpp"
#include "hhpainleve/poly_matrix.hpp"
#include "hhpainleve/model.hpp"
#include "hhpainleve/verify.hpp"
#include "hhpainleve/dynamics.hpp"
#include "hhpainleve/io.hpp"

#endif  // HHPAINLEVE_HHPAINLEVE_HPP
