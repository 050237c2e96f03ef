#pragma once

#include "closed_graph/closedness.hpp"
#include "closed_graph/clustering.hpp"
#include "closed_graph/edge_list.hpp"
#include "closed_graph/errors.hpp"
#include "closed_graph/exact.hpp"
#include "closed_graph/exchange.hpp"
#include "closed_graph/graph.hpp"
#include "closed_graph/labeling_search.hpp"
#include "closed_graph/layer_census.hpp"
