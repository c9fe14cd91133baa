#pragma once

#include "error.hpp"
#include "graph.hpp"
#include "violation.hpp"
#include "verify.hpp"
#include "bounds.hpp"
#include "permutation.hpp"
#include "instruction.hpp"
#include "order_generator.hpp"
#include "search.hpp"
#include "io.hpp"
