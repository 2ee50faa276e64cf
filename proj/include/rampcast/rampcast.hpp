#pragma once

#include "rampcast/config.hpp"
#include "rampcast/core.hpp"
#include "rampcast/eval.hpp"
#include "rampcast/features.hpp"
#include "rampcast/imbalance.hpp"
#include "rampcast/learners.hpp"
#include "rampcast/matrix_io.hpp"
#include "rampcast/model_io.hpp"
#include "rampcast/preprocess.hpp"
#include "rampcast/ramping.hpp"
#include "rampcast/stream.hpp"
#include "rampcast/synth.hpp"
