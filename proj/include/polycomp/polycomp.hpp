#ifndef POLYCOMP_POLYCOMP_HPP
#define POLYCOMP_POLYCOMP_HPP

#include "polycomp/algebra.hpp"
#include "polycomp/chebyshev.hpp"
#include "polycomp/identity.hpp"
#include "polycomp/liouville.hpp"
#include "polycomp/pell.hpp"
#include "polycomp/poly.hpp"
#include "polycomp/report.hpp"
#include "polycomp/search.hpp"
#include "polycomp/text.hpp"

#endif
