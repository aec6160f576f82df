#pragma once

#include "ternalg/scalar.hpp"
#include "ternalg/hypermatrix.hpp"
#include "ternalg/random.hpp"
#include "ternalg/codec.hpp"
#include "ternalg/ternary.hpp"
#include "ternalg/schemes.hpp"
#include "ternalg/rotation.hpp"
#include "ternalg/decomp.hpp"
#include "ternalg/linalg.hpp"
#include "ternalg/qcyclic.hpp"
