#pragma once

#include "msing/critical.hpp"
#include "msing/family_io.hpp"
#include "msing/invariants.hpp"
#include "msing/lattice.hpp"
#include "msing/skew.hpp"
