#ifndef GPKIT_GPKIT_HPP
#define GPKIT_GPKIT_HPP

#include "gpkit/graph.hpp"
#include "gpkit/presentation.hpp"
#include "gpkit/word.hpp"
#include "gpkit/coset.hpp"
#include "gpkit/hyperplane.hpp"
#include "gpkit/median.hpp"
#include "gpkit/crossing.hpp"
#include "gpkit/cone_off.hpp"
#include "gpkit/trees.hpp"
#include "gpkit/verdicts.hpp"
#include "gpkit/io.hpp"

#endif
