#pragma once

// Umbrella header: the whole finite-ring laboratory.

#include "ringlab/additive_group.hpp"
#include "ringlab/annihilators.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/certificate.hpp"
#include "ringlab/config.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/element_expr.hpp"
#include "ringlab/embedding.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/group.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/idempotents.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/involution.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ring_spec.hpp"
#include "ringlab/subset.hpp"
#include "ringlab/util.hpp"
