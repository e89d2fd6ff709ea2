#ifndef BALANCE_BALANCE_LAB_HPP
#define BALANCE_BALANCE_LAB_HPP

// Umbrella header for the whole library.

#include "balance/balance.hpp"
#include "balance/certificate_io.hpp"
#include "balance/characterize.hpp"
#include "balance/coloring.hpp"
#include "balance/construct.hpp"
#include "balance/generate.hpp"
#include "balance/graph.hpp"
#include "balance/graph6.hpp"
#include "balance/independent_set.hpp"
#include "balance/reduction.hpp"
#include "balance/search.hpp"

#endif
