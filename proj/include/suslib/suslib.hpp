#pragma once

// Library umbrella header (the CLI layer in cli.hpp is not included).
#include "suslib/charts.hpp"
#include "suslib/ingest.hpp"
#include "suslib/io.hpp"
#include "suslib/report.hpp"
#include "suslib/scoring.hpp"
#include "suslib/stats.hpp"
