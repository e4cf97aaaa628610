#pragma once

#include "divbound/bounds.hpp"
#include "divbound/divergence.hpp"
#include "divbound/errors.hpp"
#include "divbound/extended_real.hpp"
#include "divbound/generator.hpp"
#include "divbound/io.hpp"
#include "divbound/jointrange.hpp"
#include "divbound/measure.hpp"
#include "divbound/random.hpp"
