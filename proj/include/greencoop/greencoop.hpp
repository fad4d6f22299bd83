// greencoop.hpp - umbrella header.
#pragma once

#include "greencoop/comp.hpp"
#include "greencoop/joint.hpp"
#include "greencoop/link.hpp"
#include "greencoop/model.hpp"
#include "greencoop/offload.hpp"
#include "greencoop/report.hpp"
#include "greencoop/scenario_io.hpp"
#include "greencoop/scheme_result.hpp"
#include "greencoop/schemes.hpp"
#include "greencoop/solvers.hpp"
#include "greencoop/spectrum.hpp"
#include "greencoop/tariff.hpp"
