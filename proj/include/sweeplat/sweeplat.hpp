#pragma once

// Umbrella header: modular and general sweep maps, their inverses, the
// distributive lattice of equitable partitions, the scheduling view, and
// exhaustive small-instance verification.

#include "equitable.hpp"
#include "general_sweep.hpp"
#include "lattice.hpp"
#include "modular_sweep.hpp"
#include "oracle.hpp"
#include "scheduling.hpp"
#include "text.hpp"
#include "words.hpp"
