#pragma once

#include "w0/error.hpp"
#include "w0/zlinalg/int_matrix.hpp"
#include "w0/zlinalg/sparse_matrix.hpp"
#include "w0/zlinalg/smith.hpp"
#include "w0/zlinalg/lattice.hpp"
#include "w0/zlinalg/cochain_complex.hpp"
#include "w0/zlinalg/exactness.hpp"
#include "w0/sscomplex/semisimplicial_set.hpp"
#include "w0/sscomplex/simplicial_map.hpp"
#include "w0/geometry/snc.hpp"
#include "w0/geometry/resolution.hpp"
#include "w0/geometry/pair.hpp"
#include "w0/geometry/verify.hpp"
#include "w0/io/json.hpp"
