#pragma once

#include "lendens/affine.hpp"
#include "lendens/block_monoid.hpp"
#include "lendens/constructions.hpp"
#include "lendens/direct_sum.hpp"
#include "lendens/element.hpp"
#include "lendens/error.hpp"
#include "lendens/factor_engine.hpp"
#include "lendens/factorization.hpp"
#include "lendens/invariants.hpp"
#include "lendens/monoid.hpp"
#include "lendens/numerical.hpp"
#include "lendens/presentation.hpp"
#include "lendens/puiseux.hpp"
#include "lendens/rational.hpp"
