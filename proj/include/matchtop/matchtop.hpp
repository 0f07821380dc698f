#pragma once

#include "label.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "complex.hpp"
#include "smith.hpp"
#include "homology.hpp"
#include "descriptor.hpp"
#include "families.hpp"
#include "recurrence.hpp"
#include "tables.hpp"
#include "reduction.hpp"
#include "verify.hpp"
