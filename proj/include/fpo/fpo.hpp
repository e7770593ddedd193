#ifndef FPO_FPO_HPP
#define FPO_FPO_HPP

#include "fpo/bipartite.hpp"
#include "fpo/constraint_digraph.hpp"
#include "fpo/graph.hpp"
#include "fpo/io.hpp"
#include "fpo/pattern.hpp"
#include "fpo/solver.hpp"
#include "fpo/verdict.hpp"
#include "fpo/verify.hpp"

#endif  // FPO_FPO_HPP
