#pragma once

#include "taba/cnv.hpp"
#include "taba/core_lists.hpp"
#include "taba/errors.hpp"
#include "taba/eta.hpp"
#include "taba/gallery.hpp"
#include "taba/oracles.hpp"
#include "taba/render.hpp"
#include "taba/rev2.hpp"
#include "taba/self_cnv.hpp"
#include "taba/syntax.hpp"
#include "taba/tafa.hpp"
#include "taba/trace.hpp"
