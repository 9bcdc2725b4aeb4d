#pragma once

#include "asf/cartan.hpp"
#include "asf/cells.hpp"
#include "asf/chevalley.hpp"
#include "asf/domain.hpp"
#include "asf/json_io.hpp"
#include "asf/laurent.hpp"
#include "asf/lie_elt.hpp"
#include "asf/linalg.hpp"
#include "asf/rational.hpp"
#include "asf/rng.hpp"
#include "asf/root_system.hpp"
#include "asf/verify.hpp"
#include "asf/weyl.hpp"
