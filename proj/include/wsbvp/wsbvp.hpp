#pragma once

#include "wsbvp/benchmarks.hpp"
#include "wsbvp/collocation.hpp"
#include "wsbvp/dense.hpp"
#include "wsbvp/errors.hpp"
#include "wsbvp/golden.hpp"
#include "wsbvp/haar.hpp"
#include "wsbvp/hermite.hpp"
#include "wsbvp/polynomial.hpp"
#include "wsbvp/problem.hpp"
#include "wsbvp/rational.hpp"
#include "wsbvp/report.hpp"
#include "wsbvp/solvers.hpp"
