#pragma once

#include "grcat/arith.hpp"
#include "grcat/braiding.hpp"
#include "grcat/chain_map.hpp"
#include "grcat/classify.hpp"
#include "grcat/cochain.hpp"
#include "grcat/cocycle.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/group.hpp"
#include "grcat/group_ring.hpp"
#include "grcat/int_matrix.hpp"
#include "grcat/resolution.hpp"
#include "grcat/smith.hpp"
#include "grcat/solve_mod1.hpp"
#include "grcat/unity_root.hpp"
#include "grcat/version.hpp"
