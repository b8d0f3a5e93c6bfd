#pragma once

#include "gwpow/applications.hpp"
#include "gwpow/arith.hpp"
#include "gwpow/error.hpp"
#include "gwpow/fields.hpp"
#include "gwpow/grassmann.hpp"
#include "gwpow/gw.hpp"
#include "gwpow/k0var.hpp"
#include "gwpow/power.hpp"
#include "gwpow/series.hpp"
#include "gwpow/subgroup.hpp"
#include "gwpow/truncated_series.hpp"
