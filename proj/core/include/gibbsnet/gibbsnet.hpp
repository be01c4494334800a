#pragma once

#include "gibbsnet/baseline.hpp"
#include "gibbsnet/delaunay.hpp"
#include "gibbsnet/energy.hpp"
#include "gibbsnet/experiments.hpp"
#include "gibbsnet/metrics.hpp"
#include "gibbsnet/overhead.hpp"
#include "gibbsnet/sampler.hpp"
#include "gibbsnet/scene.hpp"
#include "gibbsnet/scene_io.hpp"
#include "gibbsnet/topology.hpp"
