#pragma once

#include "chain.hpp"
#include "cocycles.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "metabelian.hpp"
#include "nilpotent.hpp"
#include "point.hpp"
#include "satellite.hpp"
#include "words.hpp"
