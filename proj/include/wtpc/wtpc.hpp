// Umbrella header
#pragma once

#include <wtpc/cp_models.hpp>
#include <wtpc/curve_engine.hpp>
#include <wtpc/environment.hpp>
#include <wtpc/error.hpp>
#include <wtpc/io.hpp>
#include <wtpc/pipeline.hpp>
#include <wtpc/power_curve.hpp>
#include <wtpc/turbine.hpp>
#include <wtpc/validation.hpp>
