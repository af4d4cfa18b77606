#ifndef SYMCON_SYMCON_HPP
#define SYMCON_SYMCON_HPP

#include "symcon/containment.hpp"
#include "symcon/errors.hpp"
#include "symcon/groebner.hpp"
#include "symcon/ideal.hpp"
#include "symcon/monomial.hpp"
#include "symcon/parser.hpp"
#include "symcon/polynomial.hpp"
#include "symcon/rational.hpp"
#include "symcon/session.hpp"
#include "symcon/symbolic.hpp"

#endif  // SYMCON_SYMCON_HPP
