#pragma once

#include "braid.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "free_group.hpp"
#include "invariants.hpp"
#include "moves.hpp"
#include "network.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "survey.hpp"
