#pragma once

// Everything in one include.

#include "pcf/brooks.hpp"
#include "pcf/coloring.hpp"
#include "pcf/config.hpp"
#include "pcf/discharge.hpp"
#include "pcf/errors.hpp"
#include "pcf/exact.hpp"
#include "pcf/extend.hpp"
#include "pcf/generators.hpp"
#include "pcf/graph.hpp"
#include "pcf/io.hpp"
#include "pcf/mad.hpp"
#include "pcf/planar.hpp"
#include "pcf/plane_graph.hpp"
#include "pcf/rational.hpp"
#include "pcf/reducer.hpp"
#include "pcf/structure.hpp"
