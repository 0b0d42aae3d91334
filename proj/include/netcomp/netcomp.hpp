#ifndef NETCOMP_NETCOMP_HPP
#define NETCOMP_NETCOMP_HPP

#include "netcomp/bridge.hpp"
#include "netcomp/fdrel.hpp"
#include "netcomp/functable.hpp"
#include "netcomp/galois.hpp"
#include "netcomp/json_io.hpp"
#include "netcomp/lincode.hpp"
#include "netcomp/matroid.hpp"
#include "netcomp/netgraph.hpp"
#include "netcomp/solver.hpp"

#endif // NETCOMP_NETCOMP_HPP
