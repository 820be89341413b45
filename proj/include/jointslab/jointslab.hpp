#pragma once

#include "jointslab/algorithms.hpp"
#include "jointslab/errors.hpp"
#include "jointslab/field.hpp"
#include "jointslab/generators.hpp"
#include "jointslab/geometry.hpp"
#include "jointslab/interpolation.hpp"
#include "jointslab/io.hpp"
#include "jointslab/linalg.hpp"
#include "jointslab/numeric.hpp"
#include "jointslab/parallel.hpp"
#include "jointslab/polynomial.hpp"
