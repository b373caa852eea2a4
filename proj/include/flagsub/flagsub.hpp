#pragma once

#include "flagsub/complex.hpp"
#include "flagsub/constructions.hpp"
#include "flagsub/enumeration.hpp"
#include "flagsub/error.hpp"
#include "flagsub/face.hpp"
#include "flagsub/harness.hpp"
#include "flagsub/homology.hpp"
#include "flagsub/io.hpp"
#include "flagsub/polynomial.hpp"
#include "flagsub/subdivision.hpp"
