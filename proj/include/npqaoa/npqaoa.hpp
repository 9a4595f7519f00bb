#pragma once

// Umbrella header for the whole library.

#include "npqaoa/anneal.hpp"
#include "npqaoa/bench.hpp"
#include "npqaoa/errors.hpp"
#include "npqaoa/instance_io.hpp"
#include "npqaoa/metaheuristics.hpp"
#include "npqaoa/npp.hpp"
#include "npqaoa/optimizer.hpp"
#include "npqaoa/plot.hpp"
#include "npqaoa/qaoa.hpp"
#include "npqaoa/qubo.hpp"
#include "npqaoa/rng.hpp"
#include "npqaoa/simplex.hpp"
#include "npqaoa/statevector.hpp"
