#pragma once

#include "vba/axioms.hpp"
#include "vba/cli.hpp"
#include "vba/combined.hpp"
#include "vba/core.hpp"
#include "vba/dot.hpp"
#include "vba/enumerate.hpp"
#include "vba/error.hpp"
#include "vba/graphagg.hpp"
#include "vba/json_io.hpp"
#include "vba/justification.hpp"
#include "vba/prefagg.hpp"
