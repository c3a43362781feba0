#pragma once

#include "vcgraph/combinatorics.hpp"
#include "vcgraph/construction.hpp"
#include "vcgraph/crosscheck.hpp"
#include "vcgraph/density.hpp"
#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/hamming.hpp"
#include "vcgraph/io.hpp"
#include "vcgraph/johnson.hpp"
#include "vcgraph/labels.hpp"
#include "vcgraph/set_system.hpp"
#include "vcgraph/vertex_set.hpp"
#include "vcgraph/witness_bank.hpp"
