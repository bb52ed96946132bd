#pragma once

// Umbrella header.

#include "grt/errors.hpp"
#include "grt/group.hpp"
#include "grt/random.hpp"
#include "grt/rings.hpp"
#include "grt/group_ring.hpp"
#include "grt/tower.hpp"
#include "grt/transform.hpp"
#include "grt/module.hpp"
#include "grt/hom.hpp"
#include "grt/diag.hpp"
#include "grt/report.hpp"
#include "grt/suites.hpp"
#include "grt/serialize.hpp"
