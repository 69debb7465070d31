#ifndef MAGPATH_MAGPATH_HPP
#define MAGPATH_MAGPATH_HPP

#include "magpath/ancestral.hpp"
#include "magpath/collider_paths.hpp"
#include "magpath/combinations.hpp"
#include "magpath/counterexample.hpp"
#include "magpath/equivalence.hpp"
#include "magpath/magv1.hpp"
#include "magpath/mixed_graph.hpp"
#include "magpath/random_mag.hpp"

#endif  // MAGPATH_MAGPATH_HPP
