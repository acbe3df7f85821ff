#pragma once

#include "ollp/bench.hpp"
#include "ollp/distance_graph.hpp"
#include "ollp/encoding.hpp"
#include "ollp/experiment.hpp"
#include "ollp/geometry.hpp"
#include "ollp/instance.hpp"
#include "ollp/io.hpp"
#include "ollp/layout.hpp"
#include "ollp/svg.hpp"
#include "ollp/validator.hpp"
