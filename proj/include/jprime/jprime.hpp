#pragma once

#include "jprime/bessel.hpp"
#include "jprime/bigfloat.hpp"
#include "jprime/classifier.hpp"
#include "jprime/determinant.hpp"
#include "jprime/errors.hpp"
#include "jprime/moments.hpp"
#include "jprime/opoly.hpp"
#include "jprime/poly.hpp"
#include "jprime/rational.hpp"
#include "jprime/sturm.hpp"

namespace jprime {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jprime
