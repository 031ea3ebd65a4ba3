#pragma once

#include "holtsmark/specfun/airy.hpp"
#include "holtsmark/specfun/bessel.hpp"
#include "holtsmark/specfun/gamma.hpp"
#include "holtsmark/specfun/hypergeometric.hpp"
