// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mlpide/compensated.hpp"
#include "mlpide/cost.hpp"
#include "mlpide/experiment.hpp"
#include "mlpide/levy.hpp"
#include "mlpide/mlp.hpp"
#include "mlpide/parallel.hpp"
#include "mlpide/problems.hpp"
#include "mlpide/sde.hpp"
#include "mlpide/stream.hpp"
