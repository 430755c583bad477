#pragma once

#include "dmckit/classify.hpp"
#include "dmckit/dmcset.hpp"
#include "dmckit/document.hpp"
#include "dmckit/envelope.hpp"
#include "dmckit/funcs.hpp"
#include "dmckit/lattice.hpp"
#include "dmckit/optimize.hpp"
#include "dmckit/rational.hpp"
#include "dmckit/report.hpp"
#include "dmckit/simplex.hpp"
#include "dmckit/verdict.hpp"
