#pragma once

#include <clawmwss/bench.hpp>
#include <clawmwss/cardinality.hpp>
#include <clawmwss/claw.hpp>
#include <clawmwss/generate.hpp>
#include <clawmwss/graph.hpp>
#include <clawmwss/instance_io.hpp>
#include <clawmwss/oracle.hpp>
#include <clawmwss/verify.hpp>
#include <clawmwss/weighted.hpp>
