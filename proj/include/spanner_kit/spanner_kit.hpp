#pragma once

#include "analysis.hpp"
#include "build.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "routing.hpp"
#include "routing_sim.hpp"
#include "svg.hpp"
#include "theta5.hpp"
