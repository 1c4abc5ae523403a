#pragma once

#include "ubercontract/checkers/checkpoints.hpp"
#include "ubercontract/checkers/coarse_stabilizer.hpp"
#include "ubercontract/checkers/contraction.hpp"
#include "ubercontract/checkers/scp.hpp"
#include "ubercontract/checkers/violation.hpp"
