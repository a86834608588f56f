#pragma once

// Umbrella header for the flagcoh library.

#include "flagcoh/rootdata.hpp"
#include "flagcoh/weyl.hpp"
#include "flagcoh/charring.hpp"
#include "flagcoh/cohomology.hpp"
#include "flagcoh/linkage.hpp"
#include "flagcoh/jantzen.hpp"
#include "flagcoh/serialize.hpp"
