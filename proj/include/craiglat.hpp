#pragma once

#include "craiglat/error.hpp"
#include "craiglat/exactnum.hpp"
#include "craiglat/craig.hpp"
#include "craiglat/codes.hpp"
#include "craiglat/svp.hpp"
#include "craiglat/lift.hpp"
#include "craiglat/records.hpp"
