#pragma once

#include "bigen/binning.hpp"
#include "bigen/count.hpp"
#include "bigen/generators.hpp"
#include "bigen/graph.hpp"
#include "bigen/io.hpp"
#include "bigen/metrics.hpp"
