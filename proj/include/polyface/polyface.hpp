#pragma once

#include "polyface/constructors.hpp"
#include "polyface/corpus.hpp"
#include "polyface/errors.hpp"
#include "polyface/expr.hpp"
#include "polyface/formulas.hpp"
#include "polyface/fvector.hpp"
#include "polyface/gale2d.hpp"
#include "polyface/geometry.hpp"
#include "polyface/incidence.hpp"
#include "polyface/integer.hpp"
#include "polyface/io.hpp"
#include "polyface/isomorphism.hpp"
#include "polyface/lattice.hpp"
#include "polyface/scan.hpp"
#include "polyface/suites.hpp"
#include "polyface/vertex_set.hpp"
