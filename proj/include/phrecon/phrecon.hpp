#pragma once

#include "phrecon/edge_recon.hpp"
#include "phrecon/errors.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/io.hpp"
#include "phrecon/matching.hpp"
#include "phrecon/persistence.hpp"
#include "phrecon/pipeline.hpp"
#include "phrecon/plane_graph.hpp"
#include "phrecon/svg.hpp"
#include "phrecon/union_find.hpp"
#include "phrecon/vertex_recon.hpp"
