#pragma once

// Umbrella header: exact-arithmetic complexes for Artin and Coxeter groups.

#include "artin_complex.hpp"
#include "coxeter_matrix.hpp"
#include "cyclotomic.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "face_poset.hpp"
#include "flag_complex.hpp"
#include "group_ring.hpp"
#include "group_table.hpp"
#include "homology.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "numbers.hpp"
#include "parse.hpp"
#include "presentation.hpp"
#include "smith.hpp"
