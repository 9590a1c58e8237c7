#pragma once

#include "avn/linalg.hpp"
#include "avn/hilbert.hpp"
#include "avn/states.hpp"
#include "avn/symmetrize.hpp"
#include "avn/hv.hpp"
#include "avn/scenario_parse.hpp"
#include "avn/catalog.hpp"
#include "avn/report_io.hpp"
