#pragma once

#include "braidcryst/bieberbach.hpp"
#include "braidcryst/braid_word.hpp"
#include "braidcryst/error.hpp"
#include "braidcryst/group.hpp"
#include "braidcryst/int_matrix.hpp"
#include "braidcryst/int_poly.hpp"
#include "braidcryst/integer.hpp"
#include "braidcryst/invariants.hpp"
#include "braidcryst/mixed.hpp"
#include "braidcryst/permutation.hpp"
#include "braidcryst/torsion.hpp"
#include "braidcryst/verdict.hpp"
