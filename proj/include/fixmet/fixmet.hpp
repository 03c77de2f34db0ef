#pragma once

/// Umbrella header: the whole fixmet library.
///
/// fixmet classifies self-maps of finite metric spaces against six
/// contraction families (Banach, Kannan, generalized Kannan, Chatterjea,
/// generalized Chatterjea, perimeter-contracting), computes exact optimal
/// coefficients with witnesses, runs Picard iteration with a geometric decay
/// certificate, checks the fixed-point theorem for generalized Chatterjea
/// maps, and searches for class-separating instances.

#include "fixmet/classify.hpp"
#include "fixmet/errors.hpp"
#include "fixmet/generators.hpp"
#include "fixmet/io.hpp"
#include "fixmet/metric_space.hpp"
#include "fixmet/rational.hpp"
#include "fixmet/report_json.hpp"
#include "fixmet/rng.hpp"
#include "fixmet/search.hpp"
#include "fixmet/self_map.hpp"
#include "fixmet/solver.hpp"
