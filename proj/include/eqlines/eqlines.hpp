#pragma once

#include "eqlines/bounds.hpp"
#include "eqlines/gegenbauer.hpp"
#include "eqlines/matrices.hpp"
#include "eqlines/pipeline.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/rational.hpp"
#include "eqlines/sdp_model.hpp"
#include "eqlines/sdp_solver.hpp"
#include "eqlines/tables.hpp"
#include "eqlines/threepoint.hpp"
