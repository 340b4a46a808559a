#pragma once

#include "npspace/closure.hpp"
#include "npspace/construction.hpp"
#include "npspace/error.hpp"
#include "npspace/extension.hpp"
#include "npspace/geometry.hpp"
#include "npspace/independence.hpp"
#include "npspace/iso.hpp"
#include "npspace/lattice.hpp"
#include "npspace/verdict.hpp"
#include "npspace/zigzag.hpp"
