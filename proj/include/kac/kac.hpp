#pragma once

// Umbrella header for the Kac module crystal library.

#include "base.hpp"
#include "embedding.hpp"
#include "graph.hpp"
#include "kac_crystal.hpp"
#include "rsk_bridge.hpp"
#include "tableau.hpp"
#include "verify.hpp"
#include "word_crystal.hpp"
