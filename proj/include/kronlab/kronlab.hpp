#pragma once

// Umbrella header.

#include "kronlab/arith.hpp"
#include "kronlab/cache_file.hpp"
#include "kronlab/character.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/exp_bounds.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/partition.hpp"
#include "kronlab/quantum.hpp"
#include "kronlab/result_record.hpp"
#include "kronlab/schur_weyl.hpp"
#include "kronlab/search.hpp"
