#pragma once

#include "spheretile/avc.hpp"
#include "spheretile/generators.hpp"
#include "spheretile/json_io.hpp"
#include "spheretile/moduli.hpp"
#include "spheretile/quad_solver.hpp"
#include "spheretile/sphere_geom.hpp"
#include "spheretile/svg_render.hpp"
#include "spheretile/tiling.hpp"
#include "spheretile/vec3.hpp"
