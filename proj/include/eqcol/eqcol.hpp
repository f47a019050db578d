#pragma once

// Umbrella header: the whole equitable-coloring toolkit.

#include "eqcol/common.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/rng.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/lists.hpp"
#include "eqcol/generators.hpp"
#include "eqcol/oracle.hpp"
#include "eqcol/digraph.hpp"
#include "eqcol/hs.hpp"
#include "eqcol/ore.hpp"
#include "eqcol/forest.hpp"
