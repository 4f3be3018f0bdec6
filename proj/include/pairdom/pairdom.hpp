#pragma once

#include "pairdom/block_cut.hpp"
#include "pairdom/errors.hpp"
#include "pairdom/gen.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/judge.hpp"
#include "pairdom/oracle.hpp"
#include "pairdom/ordering.hpp"
#include "pairdom/prune.hpp"
