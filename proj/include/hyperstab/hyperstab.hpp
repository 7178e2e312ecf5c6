#pragma once

#include "core.hpp"
#include "symfunc.hpp"
#include "poly.hpp"
#include "series.hpp"
#include "m0n.hpp"
#include "stable.hpp"
#include "spectral.hpp"
#include "linalg.hpp"
#include "ffcount.hpp"
#include "reference.hpp"
#include "io.hpp"
#include "verify.hpp"
