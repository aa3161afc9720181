#pragma once

// Umbrella header.

#include "deptree/checkers.hpp"
#include "deptree/conllu.hpp"
#include "deptree/errors.hpp"
#include "deptree/genenum.hpp"
#include "deptree/lattice.hpp"
#include "deptree/transforms.hpp"
#include "deptree/transition.hpp"
#include "deptree/tree.hpp"
