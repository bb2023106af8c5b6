#pragma once

#include "criteria.hpp"
#include "derivations.hpp"
#include "echelon.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "primes.hpp"
#include "random.hpp"
#include "steinitz.hpp"
#include "subspace.hpp"
#include "tower.hpp"
