#pragma once

#include "tokendom/base_graph.hpp"
#include "tokendom/constructions.hpp"
#include "tokendom/coverings.hpp"
#include "tokendom/domination.hpp"
#include "tokendom/errors.hpp"
#include "tokendom/exact_solver.hpp"
#include "tokendom/io.hpp"
#include "tokendom/report.hpp"
#include "tokendom/subsets.hpp"
#include "tokendom/token_graph.hpp"
