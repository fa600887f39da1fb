#ifndef LERCH_HPP
#define LERCH_HPP

#include "lerch/apostol.hpp"
#include "lerch/branch.hpp"
#include "lerch/error.hpp"
#include "lerch/identities.hpp"
#include "lerch/lerch.hpp"
#include "lerch/numerics.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/rational.hpp"

#endif
