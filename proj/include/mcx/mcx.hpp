#pragma once

// Umbrella header for the matching-complex library.

#include "mcx/canonical.hpp"
#include "mcx/catalog.hpp"
#include "mcx/complex.hpp"
#include "mcx/error.hpp"
#include "mcx/graph.hpp"
#include "mcx/graph_io.hpp"
#include "mcx/homology.hpp"
#include "mcx/index_set.hpp"
#include "mcx/serialize.hpp"
#include "mcx/manifold.hpp"
#include "mcx/verify.hpp"
