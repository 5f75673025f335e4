#pragma once

#include "sandpoly/appendix_data.hpp"
#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/combinatorics.hpp"
#include "sandpoly/complete_graph.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/interval_order.hpp"
#include "sandpoly/limits.hpp"
#include "sandpoly/polyomino.hpp"
#include "sandpoly/qt_narayana.hpp"
#include "sandpoly/qt_series.hpp"
#include "sandpoly/sandpile_bipartite.hpp"
#include "sandpoly/set_partition.hpp"
#include "sandpoly/special_classes.hpp"
#include "sandpoly/transfer_matrix.hpp"
