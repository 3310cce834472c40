#ifndef POLYCOMP_ALGEBRA_HPP
#define POLYCOMP_ALGEBRA_HPP

#include "polycomp/algebra/bigint.hpp"
#include "polycomp/algebra/field.hpp"
#include "polycomp/algebra/prime_field.hpp"
#include "polycomp/algebra/quadratic_extension.hpp"
#include "polycomp/algebra/rational.hpp"

namespace polycomp {

static_assert(Field<Rational>);
static_assert(Field<Fp>);
static_assert(Field<QuadExt<Rational>>);
static_assert(Field<QuadExt<Fp>>);

} // namespace polycomp

#endif
