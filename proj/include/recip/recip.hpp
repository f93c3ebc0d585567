#pragma once

#include "recip/bisect.hpp"
#include "recip/digraph.hpp"
#include "recip/efficiency.hpp"
#include "recip/error.hpp"
#include "recip/extensions.hpp"
#include "recip/io.hpp"
#include "recip/matrix.hpp"
#include "recip/pareto.hpp"
#include "recip/perron.hpp"
#include "recip/reference.hpp"
#include "recip/sweep.hpp"
#include "recip/verify.hpp"
#include "recip/z_family.hpp"
#include "recip/z_tables.hpp"
