#pragma once

#include "spingrass/arith.hpp"
#include "spingrass/partition.hpp"
#include "spingrass/lie_algebra.hpp"
#include "spingrass/lr.hpp"
#include "spingrass/dims.hpp"
#include "spingrass/report.hpp"
#include "spingrass/spinor_decomp.hpp"
#include "spingrass/identities.hpp"
#include "spingrass/dirac.hpp"
#include "spingrass/serialize.hpp"
#include "spingrass/cache.hpp"
