#pragma once

#include "gatelab/classifier.hpp"
#include "gatelab/core.hpp"
#include "gatelab/eigen.hpp"
#include "gatelab/gate_io.hpp"
#include "gatelab/gates.hpp"
#include "gatelab/linalg.hpp"
#include "gatelab/rng.hpp"
#include "gatelab/sampling.hpp"
#include "gatelab/scheme.hpp"
#include "gatelab/synthesis.hpp"
