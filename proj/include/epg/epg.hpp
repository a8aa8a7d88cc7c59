#ifndef EPG_EPG_HPP
#define EPG_EPG_HPP

#include "epg/cyclic_lattice.hpp"
#include "epg/epg_graph.hpp"
#include "epg/errors.hpp"
#include "epg/finite_group.hpp"
#include "epg/graph_analysis.hpp"
#include "epg/group_spec.hpp"
#include "epg/number_theory.hpp"
#include "epg/planarity.hpp"
#include "epg/simple_graph.hpp"
#include "epg/theorem_verify.hpp"

#endif  // EPG_EPG_HPP
