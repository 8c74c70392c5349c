#pragma once

// Umbrella header.

#include "kscheck/clifton_kent.hpp"
#include "kscheck/experiment.hpp"
#include "kscheck/family.hpp"
#include "kscheck/family_search.hpp"
#include "kscheck/frames.hpp"
#include "kscheck/geometry.hpp"
#include "kscheck/json_io.hpp"
#include "kscheck/ks_coloring.hpp"
#include "kscheck/meyer.hpp"
#include "kscheck/nchv_model.hpp"
#include "kscheck/orthogonality_graph.hpp"
#include "kscheck/quantum.hpp"
#include "kscheck/random.hpp"
#include "kscheck/rational.hpp"
#include "kscheck/sampler.hpp"
