#pragma once

#include "sftconj/amalgamation.hpp"
#include "sftconj/block_map.hpp"
#include "sftconj/errors.hpp"
#include "sftconj/gadgets.hpp"
#include "sftconj/graph.hpp"
#include "sftconj/hitting_set.hpp"
#include "sftconj/json_io.hpp"
#include "sftconj/oracle.hpp"
#include "sftconj/search.hpp"
#include "sftconj/shift.hpp"
#include "sftconj/verdict.hpp"
#include "sftconj/verifier.hpp"
