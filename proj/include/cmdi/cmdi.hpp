#pragma once

#include "cmdi/baselines.hpp"
#include "cmdi/distance.hpp"
#include "cmdi/dynamics.hpp"
#include "cmdi/entropy.hpp"
#include "cmdi/extraction.hpp"
#include "cmdi/gdimaop.hpp"
#include "cmdi/graph.hpp"
#include "cmdi/io.hpp"
#include "cmdi/pipeline.hpp"
