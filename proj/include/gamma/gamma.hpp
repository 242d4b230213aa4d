#pragma once

// Umbrella header.

#include "gamma/combinatorics.hpp"
#include "gamma/core.hpp"
#include "gamma/json_io.hpp"
#include "gamma/oracles.hpp"
#include "gamma/pairs.hpp"
#include "gamma/partition.hpp"
#include "gamma/rep.hpp"
#include "gamma/ring.hpp"
#include "gamma/verify.hpp"
