#pragma once

#include "logspace/analytic.hpp"
#include "logspace/csv.hpp"
#include "logspace/descriptors.hpp"
#include "logspace/experiments.hpp"
#include "logspace/generators.hpp"
#include "logspace/measure.hpp"
#include "logspace/metrics.hpp"
#include "logspace/modular.hpp"
#include "logspace/nelder_mead.hpp"
#include "logspace/report.hpp"
#include "logspace/rng.hpp"
#include "logspace/summation.hpp"
#include "logspace/weighted.hpp"
