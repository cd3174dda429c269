#pragma once

#include "spinpoly/biorthogonal.hpp"
#include "spinpoly/central_factorials.hpp"
#include "spinpoly/coefficients.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/golden.hpp"
#include "spinpoly/half_integer.hpp"
#include "spinpoly/parallel.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/rotation.hpp"
#include "spinpoly/serialize.hpp"
#include "spinpoly/spin_algebra.hpp"
#include "spinpoly/vandermonde.hpp"
#include "spinpoly/verify.hpp"
