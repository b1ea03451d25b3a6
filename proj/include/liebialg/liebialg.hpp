#pragma once

#include "liebialg/scalar.hpp"
#include "liebialg/linalg.hpp"
#include "liebialg/subspace.hpp"
#include "liebialg/lie_algebra.hpp"
#include "liebialg/multivector.hpp"
#include "liebialg/bialgebra.hpp"
#include "liebialg/construction.hpp"
#include "liebialg/classical.hpp"
#include "liebialg/algebras.hpp"
