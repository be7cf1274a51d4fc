// Umbrella header.

#ifndef FDOUBLE_FDOUBLE_HPP_
#define FDOUBLE_FDOUBLE_HPP_

#include "amalgam.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "mihailova.hpp"
#include "perm_group.hpp"
#include "serialize.hpp"
#include "subgroup_graph.hpp"
#include "word.hpp"

#endif  // FDOUBLE_FDOUBLE_HPP_
