#pragma once

#include "bandsweep/artin_oracle.hpp"
#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"
#include "bandsweep/mutual_braiding.hpp"
#include "bandsweep/permutation.hpp"
#include "bandsweep/rewriting.hpp"
#include "bandsweep/word_graph.hpp"
